#include "sylv/matrix.hpp"

#include <algorithm>

namespace sylv {

MinorSpec::MinorSpec(int row, int col) : rows_{row}, cols_{col} {
    if (row < 1 || col < 1) {
        throw index_out_of_range("minor indices are 1-based");
    }
}

MinorSpec::MinorSpec(int row1, int row2, int col1, int col2)
    : rows_{row1, row2}, cols_{col1, col2} {
    if (row1 < 1 || row2 < 1 || col1 < 1 || col2 < 1) {
        throw index_out_of_range("minor indices are 1-based");
    }
    if (row1 == row2 || col1 == col2) {
        throw invalid_index_pair("double deletion requires distinct rows and columns");
    }
    std::sort(rows_.begin(), rows_.end());
    std::sort(cols_.begin(), cols_.end());
}

SymMatrix generic_matrix(int n) {
    if (n < 1) {
        throw invalid_dimension("generic matrix dimension must be at least 1");
    }
    SymMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            m(r, c) = MultiPoly(EntryVar(r + 1, c + 1));
        }
    }
    return m;
}

SymMatrix embed(const IntMatrix& m) {
    SymMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out(r, c) = MultiPoly(m(r, c));
    }
    return out;
}

SymMatrix extend(const SymMatrix& m) {
    if (!m.is_square()) throw not_square("extend requires a square matrix");
    const int n = m.rows();
    SymMatrix out(n + 1, n + 1);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) out(r, c) = m(r, c);
    }
    for (int r = 1; r <= n + 1; ++r) out(r - 1, n) = MultiPoly(EntryVar(r, n + 1));
    for (int c = 1; c <= n; ++c) out(n, c - 1) = MultiPoly(EntryVar(n + 1, c));
    return out;
}

SymMatrix replace_row_with_border(const SymMatrix& m, int row) {
    if (!m.is_square()) throw not_square("row replacement requires a square matrix");
    const int n = m.rows();
    if (row < 1 || row > n) {
        throw index_out_of_range("row " + std::to_string(row) + " outside 1.." +
                                 std::to_string(n));
    }
    SymMatrix out = m;
    for (int c = 1; c <= n; ++c) {
        out(row - 1, c - 1) = MultiPoly(EntryVar(n + 1, c));
    }
    return out;
}

IntMatrix evaluate(const SymMatrix& m, const std::map<EntryVar, BigInt>& assignment) {
    IntMatrix out(m.rows(), m.cols());
    for (int r = 0; r < m.rows(); ++r) {
        for (int c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).eval(assignment);
    }
    return out;
}

} // namespace sylv

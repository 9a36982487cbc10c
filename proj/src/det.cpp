#include "sylv/det.hpp"

#include <set>

namespace sylv {

MultiPoly cofactor_from_derivative(const SymMatrix& m, int i, int j) {
    if (!m.is_square()) throw not_square("cofactor requires a square matrix");
    const int n = m.rows();
    if (n < 1) throw invalid_dimension("cofactor requires n >= 1");
    if (i < 1 || i > n || j < 1 || j > n) {
        throw index_out_of_range("cofactor indices outside 1.." + std::to_string(n));
    }
    std::set<EntryVar> seen;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            const MultiPoly& p = m(r, c);
            if (p.term_count() != 1) {
                throw not_generic("entry (" + std::to_string(r + 1) + "," +
                                  std::to_string(c + 1) + ") is not a plain variable");
            }
            const auto& [mono, coeff] = *p.terms().begin();
            if (coeff != 1 || mono.degree() != 1) {
                throw not_generic("entry (" + std::to_string(r + 1) + "," +
                                  std::to_string(c + 1) + ") is not a plain variable");
            }
            if (!seen.insert(mono.factors().front().first).second) {
                throw not_generic("entries are not distinct variables");
            }
        }
    }
    const auto& var = m(i - 1, j - 1).terms().begin()->first.factors().front().first;
    return det(m).derivative(var);
}

BorderOperator::BorderOperator(int row, int dim) : row_(row), dim_(dim) {
    if (dim < 1) throw invalid_dimension("border operator dimension must be >= 1");
    if (row < 1 || row > dim) {
        throw index_out_of_range("border operator row outside 1.." + std::to_string(dim));
    }
}

MultiPoly apply(const BorderOperator& op, const MultiPoly& p) {
    MultiPoly out;
    for (int j = 1; j <= op.dim(); ++j) {
        const MultiPoly d = p.derivative(EntryVar(op.row(), j));
        if (d.is_zero()) continue;
        out += MultiPoly(EntryVar(op.dim() + 1, j)) * d;
    }
    return out;
}

MultiPoly border_expansion(int n, const MultiPoly& base_det) {
    if (n < 1) throw invalid_dimension("border expansion requires n >= 1");
    MultiPoly out = MultiPoly(EntryVar(n + 1, n + 1)) * base_det;
    for (int i = 1; i <= n; ++i) {
        out -= MultiPoly(EntryVar(i, n + 1)) * apply(BorderOperator(i, n), base_det);
    }
    return out;
}

} // namespace sylv

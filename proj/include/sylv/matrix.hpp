#ifndef SYLV_MATRIX_HPP
#define SYLV_MATRIX_HPP

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "sylv/errors.hpp"
#include "sylv/multipoly.hpp"

namespace sylv {

// Dense row-major matrix over an exact scalar ring.  The 0x0 matrix is a
// valid value (its determinant is 1).  Storage access through operator()
// is 0-based; the algebraic operations below (minors, cofactors, row
// replacement) speak the 1-based index language of the entry variables.
template <typename T>
class Matrix {
public:
    Matrix() = default;

    Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
        if (rows < 0 || cols < 0) {
            throw invalid_dimension("matrix dimensions must be nonnegative");
        }
        data_.resize(static_cast<std::size_t>(rows) * cols);
    }

    Matrix(std::initializer_list<std::initializer_list<T>> rows) {
        rows_ = static_cast<int>(rows.size());
        cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
        data_.reserve(static_cast<std::size_t>(rows_) * cols_);
        for (const auto& row : rows) {
            if (static_cast<int>(row.size()) != cols_) {
                throw invalid_dimension("ragged initializer for matrix");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    T& operator()(int r, int c) { return data_[index(r, c)]; }
    const T& operator()(int r, int c) const { return data_[index(r, c)]; }

    T& at(int r, int c) {
        check(r, c);
        return data_[index(r, c)];
    }
    const T& at(int r, int c) const {
        check(r, c);
        return data_[index(r, c)];
    }

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }

    Matrix transposed() const {
        Matrix out(cols_, rows_);
        for (int r = 0; r < rows_; ++r) {
            for (int c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
        }
        return out;
    }

private:
    std::size_t index(int r, int c) const noexcept {
        return static_cast<std::size_t>(r) * cols_ + c;
    }
    void check(int r, int c) const {
        if (r < 0 || r >= rows_ || c < 0 || c >= cols_) {
            throw index_out_of_range("matrix access (" + std::to_string(r) +
                                     "," + std::to_string(c) + ") outside " +
                                     std::to_string(rows_) + "x" +
                                     std::to_string(cols_));
        }
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<T> data_;
};

using SymMatrix = Matrix<MultiPoly>;
using IntMatrix = Matrix<BigInt>;

// Rows and columns to delete, in ORIGINAL 1-based indices of the matrix the
// spec is applied to: either one row and one column, or two of each.  A
// two-index spec stores its indices sorted ascending; coincident indices
// are rejected (the double-deletion identity is degenerate there).
class MinorSpec {
public:
    MinorSpec(int row, int col);
    MinorSpec(int row1, int row2, int col1, int col2);

    int order() const noexcept { return static_cast<int>(rows_.size()); }
    const std::vector<int>& deleted_rows() const noexcept { return rows_; }
    const std::vector<int>& deleted_cols() const noexcept { return cols_; }

private:
    std::vector<int> rows_;
    std::vector<int> cols_;
};

// Copy of m with the spec'd rows and columns removed.  Deletion is
// positional: entries keep whatever values (and hence variable labels) they
// had.  m must be square and the indices in range.
template <typename T>
Matrix<T> minor(const Matrix<T>& m, const MinorSpec& spec) {
    if (!m.is_square()) throw not_square("minor requires a square matrix");
    const int n = m.rows();
    for (int r : spec.deleted_rows()) {
        if (r < 1 || r > n) {
            throw index_out_of_range("minor row " + std::to_string(r) +
                                     " outside 1.." + std::to_string(n));
        }
    }
    for (int c : spec.deleted_cols()) {
        if (c < 1 || c > n) {
            throw index_out_of_range("minor column " + std::to_string(c) +
                                     " outside 1.." + std::to_string(n));
        }
    }
    const int k = spec.order();
    Matrix<T> out(n - k, n - k);
    int rr = 0;
    for (int r = 1; r <= n; ++r) {
        if (r == spec.deleted_rows()[0] || (k == 2 && r == spec.deleted_rows()[1])) {
            continue;
        }
        int cc = 0;
        for (int c = 1; c <= n; ++c) {
            if (c == spec.deleted_cols()[0] || (k == 2 && c == spec.deleted_cols()[1])) {
                continue;
            }
            out(rr, cc) = m(r - 1, c - 1);
            ++cc;
        }
        ++rr;
    }
    return out;
}

// The n x n matrix of distinct indeterminates a[r,c]; n >= 1.
SymMatrix generic_matrix(int n);

// Integer matrix embedded entrywise as constant polynomials.
SymMatrix embed(const IntMatrix& m);

// The (n+1) x (n+1) bordered extension: m with a fresh border row
// a[n+1,1..n+1] and border column a[1..n,n+1] appended.
SymMatrix extend(const SymMatrix& m);

// Copy of the n x n matrix m whose 1-based row `row` is replaced by the
// border-row variables a[n+1,1..n].
SymMatrix replace_row_with_border(const SymMatrix& m, int row);

// Entrywise evaluation under a full variable assignment.
IntMatrix evaluate(const SymMatrix& m, const std::map<EntryVar, BigInt>& assignment);

} // namespace sylv

#endif

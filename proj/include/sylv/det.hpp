#ifndef SYLV_DET_HPP
#define SYLV_DET_HPP

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "sylv/matrix.hpp"

namespace sylv {

// Laplace expansion memoized on column subsets: 2^n subproblems instead of
// the n! of the plain recursion, which keeps symbolic n = 5 comfortable.
// Beyond this dimension the subset table itself is the bottleneck; callers
// wanting large numeric determinants should use bareiss_det.
inline constexpr int kMaxExpansionDim = 20;

namespace detail {

// det of the submatrix formed by the last popcount(mask) rows of m and the
// columns whose bits are set in mask.  The cache lives and dies with one
// top-level det call.
template <typename T>
const T& subset_det(const Matrix<T>& m, std::uint32_t mask,
                    std::vector<std::optional<T>>& cache) {
    std::optional<T>& slot = cache[mask];
    if (slot) return *slot;

    const int k = std::popcount(mask);
    const int row = m.rows() - k;
    T acc(0);
    int pos = 0;
    for (int c = 0; c < m.cols(); ++c) {
        if (!(mask & (1u << c))) continue;
        const T& sub = subset_det(m, mask & ~(1u << c), cache);
        if (pos % 2 == 0) {
            acc += m(row, c) * sub;
        } else {
            acc -= m(row, c) * sub;
        }
        ++pos;
    }
    slot = std::move(acc);
    return *slot;
}

} // namespace detail

// Exact determinant by first-row cofactor expansion (memoized over column
// subsets).  det of the 0x0 matrix is 1.
template <typename T>
T det(const Matrix<T>& m) {
    if (!m.is_square()) throw not_square("determinant requires a square matrix");
    const int n = m.rows();
    if (n == 0) return T(1);
    if (n > kMaxExpansionDim) {
        throw dimension_too_large("expansion determinant limited to n <= " +
                                  std::to_string(kMaxExpansionDim) +
                                  "; use fraction-free elimination");
    }
    std::vector<std::optional<T>> cache(std::size_t(1) << n);
    cache[0] = T(1);
    return detail::subset_det(m, (std::uint32_t(1) << n) - 1, cache);
}

// (-1)^(i+j) det of the minor, 1-based indices.
template <typename T>
T cofactor(const Matrix<T>& m, int i, int j) {
    if (!m.is_square()) throw not_square("cofactor requires a square matrix");
    const T d = det(minor(m, MinorSpec(i, j)));
    return (i + j) % 2 == 0 ? d : T(0) - d;
}

// Cofactor of a generic matrix obtained as the formal partial derivative of
// its determinant with respect to the (i,j) entry's variable.  Requires
// every entry to be a distinct plain variable (throws not_generic).
MultiPoly cofactor_from_derivative(const SymMatrix& m, int i, int j);

// The derivation sum_j a[dim+1,j] * d/d a[row,j].  Applied to the
// determinant of the generic dim x dim matrix it produces the determinant
// with `row` replaced by the border row; variables of absent rows simply
// contribute zero.
class BorderOperator {
public:
    BorderOperator(int row, int dim);
    int row() const noexcept { return row_; }
    int dim() const noexcept { return dim_; }

private:
    int row_;
    int dim_;
};

MultiPoly apply(const BorderOperator& op, const MultiPoly& p);

// Expansion of a bordered determinant along its last column:
//   a[n+1,n+1]*f - sum_i a[i,n+1] * (border operator i applied to f).
// With f the determinant of the generic n x n matrix (or of any of its
// minors) this equals the determinant of the correspondingly bordered
// matrix.
MultiPoly border_expansion(int n, const MultiPoly& base_det);

} // namespace sylv

#endif

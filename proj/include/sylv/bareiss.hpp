#ifndef SYLV_BAREISS_HPP
#define SYLV_BAREISS_HPP

#include <utility>
#include <vector>

#include "sylv/matrix.hpp"

namespace sylv {

struct PivotRecord {
    int step;       // 1-based elimination step
    int pivot_row;  // 1-based row the pivot was taken from (== step if no swap)
    BigInt value;   // the pivot, i.e. the step'th leading principal minor
};

struct EliminationTrace {
    std::vector<PivotRecord> pivots;
    int sign = 1;  // (-1)^(number of row swaps)
    // principal_minors[k] = det of the leading (k+1)x(k+1) submatrix of the
    // row-permuted input; the last entry equals sign * det(input).
    std::vector<BigInt> principal_minors;
};

// Fraction-free (one-step) elimination determinant.  Each update divides by
// the previous pivot and the division is checked to be exact — a nonzero
// remainder throws internal_error.  Zero pivots are repaired by swapping in
// the first nonzero row below; a fully zero column means determinant 0.
std::pair<BigInt, EliminationTrace> bareiss_det(const IntMatrix& m);

// Leading principal minors d_1..d_n of m itself.  Throws pivot_breakdown if
// a zero pivot with a nonzero candidate below would force a row swap (the
// minors computed after a swap would belong to the permuted matrix).  A
// zero pivot over an all-zero column is fine: every later leading minor is
// then zero as well.
std::vector<BigInt> bareiss_minors(const IntMatrix& m);

} // namespace sylv

#endif

#include "sylv/bareiss.hpp"

namespace sylv {

namespace {

// Shared elimination loop.  `allow_swaps` selects between the determinant
// contract (swap and track the sign) and the leading-minors contract
// (refuse to swap).  Returns the trace; the working matrix w is consumed.
EliminationTrace eliminate(IntMatrix w, bool allow_swaps) {
    const int n = w.rows();
    EliminationTrace trace;
    trace.principal_minors.reserve(n);
    BigInt prev = 1;

    for (int k = 0; k < n; ++k) {
        if (w(k, k) == 0) {
            int found = -1;
            for (int r = k + 1; r < n; ++r) {
                if (w(r, k) != 0) {
                    found = r;
                    break;
                }
            }
            if (found < 0) {
                // Dead column: every remaining leading minor of the
                // (permuted) matrix is zero, including the determinant.
                for (int j = k; j < n; ++j) trace.principal_minors.emplace_back(0);
                return trace;
            }
            if (!allow_swaps) {
                throw pivot_breakdown("leading principal minor " +
                                      std::to_string(k + 1) +
                                      " is zero; a row swap would be required");
            }
            for (int c = 0; c < n; ++c) std::swap(w(k, c), w(found, c));
            trace.sign = -trace.sign;
            trace.pivots.push_back({k + 1, found + 1, w(k, k)});
        } else {
            trace.pivots.push_back({k + 1, k + 1, w(k, k)});
        }

        const BigInt pivot = w(k, k);
        trace.principal_minors.push_back(pivot);
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                w(r, c) = exact_div(pivot * w(r, c) - w(r, k) * w(k, c), prev);
            }
            w(r, k) = 0;
        }
        prev = pivot;
    }
    return trace;
}

} // namespace

std::pair<BigInt, EliminationTrace> bareiss_det(const IntMatrix& m) {
    if (!m.is_square()) throw not_square("determinant requires a square matrix");
    if (m.rows() == 0) return {BigInt(1), EliminationTrace{}};
    EliminationTrace trace = eliminate(m, /*allow_swaps=*/true);
    BigInt d = trace.sign * trace.principal_minors.back();
    return {std::move(d), std::move(trace)};
}

std::vector<BigInt> bareiss_minors(const IntMatrix& m) {
    if (!m.is_square()) throw not_square("leading minors require a square matrix");
    if (m.rows() == 0) return {};
    return eliminate(m, /*allow_swaps=*/false).principal_minors;
}

} // namespace sylv

#ifndef SYLV_VERIFY_HPP
#define SYLV_VERIFY_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sylv/det.hpp"
#include "sylv/matrix.hpp"

namespace sylv {

// Outcome of one identity check.  T is MultiPoly for symbolic checks and
// BigInt for numeric ones; `holds` iff lhs - rhs is identically zero.
template <typename T>
struct IdentityReport {
    bool holds = false;
    T lhs{};
    T rhs{};
    T residual{};
    int n = 0;
    std::array<int, 4> indices{};  // deleted rows i < j, deleted columns k < l
};

// The two-rows/two-columns determinant identity
//   det(A) * det(A[i,j|k,l]) = det(A[i|k])*det(A[j|l]) - det(A[i|l])*det(A[j|k])
// checked at sorted index pairs i < j, k < l.  Unsorted or coincident
// indices are rejected rather than sign-normalized.
template <typename T>
IdentityReport<T> check_general(const Matrix<T>& m, int i, int j, int k, int l) {
    if (!m.is_square()) throw not_square("identity check requires a square matrix");
    const int n = m.rows();
    if (n < 2) throw dimension_too_small("identity check requires n >= 2");
    if (i == j || k == l) {
        throw invalid_index_pair("deleted rows and columns must be distinct");
    }
    if (i > j || k > l) {
        throw invalid_index_pair("index pairs must be sorted ascending");
    }
    if (i < 1 || j > n || k < 1 || l > n) {
        throw index_out_of_range("identity indices outside 1.." + std::to_string(n));
    }

    IdentityReport<T> rep;
    rep.n = n;
    rep.indices = {i, j, k, l};
    rep.lhs = det(m) * det(minor(m, MinorSpec(i, j, k, l)));
    rep.rhs = det(minor(m, MinorSpec(i, k))) * det(minor(m, MinorSpec(j, l))) -
              det(minor(m, MinorSpec(i, l))) * det(minor(m, MinorSpec(j, k)));
    rep.residual = rep.lhs - rep.rhs;
    rep.holds = (rep.residual == T(0));
    return rep;
}

// The canonical instance (i,j|k,l) = (1,2|1,2) the general form reduces to
// by row/column permutations.  For n = 2 the double minor is 0x0 with
// determinant 1.
template <typename T>
IdentityReport<T> check_canonical(const Matrix<T>& m) {
    return check_general(m, 1, 2, 1, 2);
}

// One collected term group of the bordered identity: all monomials sharing
// the same pattern of border-column variables (the exponent of the corner
// a[n+1,n+1] and of each a[i,n+1]).
struct TermGroup {
    std::string name;            // "corner_sq", "mixed(i)", "cross(i,j)", ...
    int corner_exp = 0;
    std::vector<int> border_rows;  // rows i of a[i,n+1] factors, with multiplicity
    MultiPoly lhs_part;
    MultiPoly rhs_part;
    MultiPoly residual;
    bool vanishes = false;
};

struct InductionReplay {
    int n = 0;
    std::vector<TermGroup> groups;
    bool all_vanish() const {
        for (const auto& g : groups) {
            if (!g.vanishes) return false;
        }
        return true;
    }
};

// Replays the bordered-identity step at base dimension n (1 <= n <= 4):
// expands both sides of the identity for the extended (n+1) x (n+1) generic
// matrix via border_expansion of the six base determinants, partitions each
// side by border-column variable pattern, and reports whether every group's
// lhs - rhs vanishes on its own.  Group-by-group vanishing is strictly
// stronger than the total residual vanishing.
InductionReplay replay_induction_step(int n);

struct CampaignSummary {
    long long matrices_run = 0;
    long long checks_run = 0;
    long long violations = 0;
};

// Seeded random integer trials of the general identity: for each n in
// [n_min, n_max], `trials` matrices with entries uniform in
// [-entry_bound, entry_bound] (SplitMix64 stream, entries drawn row-major,
// trials in order, n ascending), each checked over every sorted index
// tuple.  Bit-reproducible for a fixed seed.
CampaignSummary random_numeric_campaign(int n_min, int n_max, int trials,
                                        std::uint64_t seed, long entry_bound);

// Determinant by repeated condensation of contiguous minors, the iterated
// corner instance of the identity.  Every division is by an interior minor
// of the previous level and is checked exact.  A zero interior minor throws
// zero_interior_minor (no perturbation fallback; use bareiss_det instead).
BigInt dodgson_condensation(const IntMatrix& m);

} // namespace sylv

#endif

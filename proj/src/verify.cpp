#include "sylv/verify.hpp"

#include <algorithm>
#include <map>

#include "sylv/rng.hpp"

namespace sylv {

namespace {

struct GroupKey {
    int corner = 0;
    std::vector<int> rows;
    auto operator<=>(const GroupKey&) const = default;
};

std::string group_name(const GroupKey& key) {
    if (key.corner == 2 && key.rows.empty()) return "corner_sq";
    if (key.corner == 1 && key.rows.size() == 1) {
        return "mixed(" + std::to_string(key.rows[0]) + ")";
    }
    if (key.corner == 0 && key.rows.size() == 2) {
        return "cross(" + std::to_string(key.rows[0]) + "," +
               std::to_string(key.rows[1]) + ")";
    }
    // Degree-1 patterns only arise in the degenerate n = 1 replay.
    if (key.corner == 1 && key.rows.empty()) return "corner";
    if (key.corner == 0 && key.rows.size() == 1) {
        return "border(" + std::to_string(key.rows[0]) + ")";
    }
    std::string name = "pattern(corner^" + std::to_string(key.corner);
    for (int r : key.rows) name += ",row" + std::to_string(r);
    return name + ")";
}

// Splits p by the exact border-column monomial pattern: the exponent of the
// corner a[n+1,n+1] and of each a[i,n+1].  Purely syntactic on the
// canonical form.
std::map<GroupKey, MultiPoly> partition_by_border_pattern(const MultiPoly& p, int n) {
    std::map<GroupKey, MultiPoly> parts;
    for (const auto& [mono, coeff] : p.terms()) {
        GroupKey key;
        key.corner = mono.exponent_of(EntryVar(n + 1, n + 1));
        for (int i = 1; i <= n; ++i) {
            const int e = mono.exponent_of(EntryVar(i, n + 1));
            for (int t = 0; t < e; ++t) key.rows.push_back(i);
        }
        parts[key] += MultiPoly(mono, coeff);
    }
    return parts;
}

InductionReplay assemble_groups(int n, const MultiPoly& lhs, const MultiPoly& rhs) {
    InductionReplay replay;
    replay.n = n;
    auto lhs_parts = partition_by_border_pattern(lhs, n);
    auto rhs_parts = partition_by_border_pattern(rhs, n);

    std::map<GroupKey, TermGroup> groups;
    if (n >= 2) {
        // Every border pattern of total degree 2 is a collected group, even
        // when its terms cancel inside one side before the subtraction.
        groups[GroupKey{2, {}}];
        for (int i = 1; i <= n; ++i) {
            groups[GroupKey{1, {i}}];
            for (int j = i; j <= n; ++j) groups[GroupKey{0, {i, j}}];
        }
    }
    for (auto& [key, part] : lhs_parts) groups[key].lhs_part = std::move(part);
    for (auto& [key, part] : rhs_parts) groups[key].rhs_part = std::move(part);

    for (auto& [key, group] : groups) {
        group.name = group_name(key);
        group.corner_exp = key.corner;
        group.border_rows = key.rows;
        group.residual = group.lhs_part - group.rhs_part;
        group.vanishes = group.residual.is_zero();
        replay.groups.push_back(std::move(group));
    }
    // Corner group first, then mixed, then cross, each family ascending.
    std::sort(replay.groups.begin(), replay.groups.end(),
              [](const TermGroup& a, const TermGroup& b) {
                  if (a.corner_exp != b.corner_exp) return a.corner_exp > b.corner_exp;
                  return a.border_rows < b.border_rows;
              });
    return replay;
}

} // namespace

InductionReplay replay_induction_step(int n) {
    if (n < 1) throw invalid_dimension("replay dimension must be at least 1");
    if (n > 4) throw dimension_too_large("replay is limited to n <= 4");

    if (n == 1) {
        // The bordered identity at base dimension 1 is the canonical
        // identity for the 2x2 extension itself; the border expansion of
        // minors that delete row or column 2 of a 1x1 matrix is undefined,
        // so the five determinants are taken directly.
        const SymMatrix ext = extend(generic_matrix(1));
        const MultiPoly lhs = det(ext);  // times det of the 0x0 double minor, = 1
        const MultiPoly rhs =
            det(minor(ext, MinorSpec(1, 1))) * det(minor(ext, MinorSpec(2, 2))) -
            det(minor(ext, MinorSpec(1, 2))) * det(minor(ext, MinorSpec(2, 1)));
        return assemble_groups(1, lhs, rhs);
    }

    const SymMatrix a = generic_matrix(n);
    const MultiPoly base = det(a);
    const MultiPoly both = det(minor(a, MinorSpec(1, 2, 1, 2)));
    const MultiPoly m11 = det(minor(a, MinorSpec(1, 1)));
    const MultiPoly m22 = det(minor(a, MinorSpec(2, 2)));
    const MultiPoly m12 = det(minor(a, MinorSpec(1, 2)));
    const MultiPoly m21 = det(minor(a, MinorSpec(2, 1)));

    const MultiPoly lhs = border_expansion(n, base) * border_expansion(n, both);
    const MultiPoly rhs = border_expansion(n, m11) * border_expansion(n, m22) -
                          border_expansion(n, m12) * border_expansion(n, m21);
    return assemble_groups(n, lhs, rhs);
}

CampaignSummary random_numeric_campaign(int n_min, int n_max, int trials,
                                        std::uint64_t seed, long entry_bound) {
    if (n_min < 2) throw dimension_too_small("campaign requires n >= 2");
    if (n_max < n_min) throw invalid_dimension("empty dimension range");
    if (trials < 1) throw error("campaign requires at least one trial");
    if (entry_bound < 1) throw error("entry bound must be at least 1");

    SplitMix64 gen(seed);
    CampaignSummary summary;
    for (int n = n_min; n <= n_max; ++n) {
        for (int t = 0; t < trials; ++t) {
            IntMatrix m(n, n);
            for (int r = 0; r < n; ++r) {
                for (int c = 0; c < n; ++c) m(r, c) = gen.bounded(entry_bound);
            }
            ++summary.matrices_run;
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    for (int k = 1; k <= n; ++k) {
                        for (int l = k + 1; l <= n; ++l) {
                            ++summary.checks_run;
                            if (!check_general(m, i, j, k, l).holds) {
                                ++summary.violations;
                            }
                        }
                    }
                }
            }
        }
    }
    return summary;
}

BigInt dodgson_condensation(const IntMatrix& m) {
    if (!m.is_square()) throw not_square("condensation requires a square matrix");
    const int n = m.rows();
    if (n < 1) throw invalid_dimension("condensation requires n >= 1");
    if (n == 1) return m(0, 0);

    // prev holds the (k-1)x(k-1) contiguous minors, cur the k x k ones;
    // level 0 minors are empty determinants, all 1.
    IntMatrix prev(n + 1, n + 1);
    for (int r = 0; r <= n; ++r) {
        for (int c = 0; c <= n; ++c) prev(r, c) = 1;
    }
    IntMatrix cur = m;
    while (cur.rows() > 1) {
        const int size = cur.rows() - 1;
        IntMatrix next(size, size);
        for (int r = 0; r < size; ++r) {
            for (int c = 0; c < size; ++c) {
                const BigInt& divisor = prev(r + 1, c + 1);
                if (divisor == 0) {
                    throw zero_interior_minor(
                        "zero interior minor during condensation; "
                        "use fraction-free elimination instead");
                }
                next(r, c) = exact_div(
                    cur(r, c) * cur(r + 1, c + 1) - cur(r, c + 1) * cur(r + 1, c),
                    divisor);
            }
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur(0, 0);
}

} // namespace sylv

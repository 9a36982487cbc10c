#ifndef SYLV_MONOMIAL_HPP
#define SYLV_MONOMIAL_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "sylv/entry_var.hpp"

namespace sylv {

// Product of entry variables with positive exponents.  Factors are kept
// strictly increasing by variable; the empty factor list is the constant
// monomial 1.
class Monomial {
public:
    using Factor = std::pair<EntryVar, int>;

    Monomial() = default;
    explicit Monomial(EntryVar v) : factors_{{v, 1}} {}

    // Normalizes: sorts, merges repeated variables, drops zero exponents.
    // Negative exponents throw invalid_dimension.
    Monomial(std::initializer_list<Factor> factors);

    bool is_one() const noexcept { return factors_.empty(); }
    int degree() const noexcept;
    int exponent_of(EntryVar v) const noexcept;
    const std::vector<Factor>& factors() const noexcept { return factors_; }

    Monomial operator*(const Monomial& rhs) const;

    // The monomial with the exponent of v lowered by one; v must occur.
    Monomial divided_once_by(EntryVar v) const;

    // Term order: lexicographic by variable (row-major), ties broken by
    // higher exponent first; a monomial precedes its proper prefixes, so
    // e.g. a[1,1]^2 < a[1,1]*a[2,2] < a[1,1] < a[1,2] < 1.
    std::strong_ordering operator<=>(const Monomial& rhs) const noexcept;
    bool operator==(const Monomial& rhs) const noexcept {
        return factors_ == rhs.factors_;
    }

    std::string str() const;  // "a[1,1]^2*a[2,3]", "1" for the constant

private:
    std::vector<Factor> factors_;
};

} // namespace sylv

#endif

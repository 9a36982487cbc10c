#ifndef SYLV_MULTIPOLY_HPP
#define SYLV_MULTIPOLY_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "sylv/bigint.hpp"
#include "sylv/monomial.hpp"

namespace sylv {

// Sparse multivariate polynomial over the integers in the entry variables
// a[r,c].  Canonical form is maintained eagerly: terms are keyed in
// monomial order and zero coefficients are never stored, so operator==
// decides mathematical equality.  Values are immutable in spirit: every
// operation returns a fresh polynomial.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, BigInt>;

    MultiPoly() = default;  // the zero polynomial
    MultiPoly(long value) {
        if (value != 0) terms_.emplace(Monomial{}, value);
    }
    MultiPoly(const BigInt& value) {
        if (value != 0) terms_.emplace(Monomial{}, value);
    }
    explicit MultiPoly(EntryVar v) { terms_.emplace(Monomial(v), 1); }
    MultiPoly(const Monomial& m, const BigInt& coeff) {
        if (coeff != 0) terms_.emplace(m, coeff);
    }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
    }
    std::size_t term_count() const noexcept { return terms_.size(); }
    const TermMap& terms() const noexcept { return terms_; }

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& rhs);
    MultiPoly& operator-=(const MultiPoly& rhs);
    MultiPoly operator+(const MultiPoly& rhs) const;
    MultiPoly operator-(const MultiPoly& rhs) const;
    MultiPoly operator*(const MultiPoly& rhs) const;
    MultiPoly& operator*=(const MultiPoly& rhs);

    bool operator==(const MultiPoly& rhs) const { return terms_ == rhs.terms_; }

    // Formal partial derivative with respect to v; terms lacking v vanish.
    MultiPoly derivative(EntryVar v) const;

    // Exact value under a full assignment of the occurring variables.
    // Throws unbound_variable if a variable of the polynomial is missing.
    BigInt eval(const std::map<EntryVar, BigInt>& assignment) const;

    // Highest power of v in any term (0 when v does not occur).
    int degree_in(EntryVar v) const noexcept;

    // Deterministic rendering: terms in monomial order, e.g.
    // "a[1,1]*a[2,2] - a[1,2]*a[2,1]"; the zero polynomial is "0".
    std::string str() const;

private:
    void add_term(const Monomial& m, const BigInt& coeff);

    TermMap terms_;
};

MultiPoly operator*(const BigInt& k, const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

} // namespace sylv

#endif

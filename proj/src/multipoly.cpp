#include "sylv/multipoly.hpp"

#include <ostream>

namespace sylv {

void MultiPoly::add_term(const Monomial& m, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
}

MultiPoly MultiPoly::operator+(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out += rhs;
    return out;
}

MultiPoly MultiPoly::operator-(const MultiPoly& rhs) const {
    MultiPoly out = *this;
    out -= rhs;
    return out;
}

MultiPoly MultiPoly::operator*(const MultiPoly& rhs) const {
    MultiPoly out;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            out.add_term(ma * mb, ca * cb);
        }
    }
    return out;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

MultiPoly MultiPoly::derivative(EntryVar v) const {
    MultiPoly out;
    for (const auto& [m, c] : terms_) {
        const int e = m.exponent_of(v);
        if (e == 0) continue;
        out.add_term(m.divided_once_by(v), c * e);
    }
    return out;
}

BigInt MultiPoly::eval(const std::map<EntryVar, BigInt>& assignment) const {
    BigInt total = 0;
    for (const auto& [m, c] : terms_) {
        BigInt term = c;
        for (const auto& [v, e] : m.factors()) {
            auto it = assignment.find(v);
            if (it == assignment.end()) {
                throw unbound_variable("no value assigned to " + v.str());
            }
            BigInt power;
            mpz_pow_ui(power.get_mpz_t(), it->second.get_mpz_t(),
                       static_cast<unsigned long>(e));
            term *= power;
        }
        total += term;
    }
    return total;
}

int MultiPoly::degree_in(EntryVar v) const noexcept {
    int best = 0;
    for (const auto& [m, c] : terms_) {
        best = std::max(best, m.exponent_of(v));
    }
    return best;
}

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [m, c] : terms_) {
        const bool negative = c < 0;
        const BigInt mag = negative ? BigInt(-c) : c;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (m.is_one()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += m.str();
        } else {
            out += mag.get_str() + "*" + m.str();
        }
    }
    return out;
}

MultiPoly operator*(const BigInt& k, const MultiPoly& p) {
    return MultiPoly(k) * p;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) {
    return os << p.str();
}

} // namespace sylv

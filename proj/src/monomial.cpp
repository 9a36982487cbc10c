#include "sylv/monomial.hpp"

#include <algorithm>

namespace sylv {

Monomial::Monomial(std::initializer_list<Factor> factors) {
    factors_.assign(factors.begin(), factors.end());
    std::sort(factors_.begin(), factors_.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    std::vector<Factor> merged;
    for (const Factor& f : factors_) {
        if (f.second < 0) {
            throw invalid_dimension("monomial exponents must be nonnegative");
        }
        if (!merged.empty() && merged.back().first == f.first) {
            merged.back().second += f.second;
        } else {
            merged.push_back(f);
        }
    }
    std::erase_if(merged, [](const Factor& f) { return f.second == 0; });
    factors_ = std::move(merged);
}

int Monomial::degree() const noexcept {
    int d = 0;
    for (const Factor& f : factors_) d += f.second;
    return d;
}

int Monomial::exponent_of(EntryVar v) const noexcept {
    for (const Factor& f : factors_) {
        if (f.first == v) return f.second;
        if (v < f.first) break;
    }
    return 0;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + rhs.factors_.size());
    auto a = factors_.begin(), b = rhs.factors_.begin();
    while (a != factors_.end() && b != rhs.factors_.end()) {
        if (a->first < b->first) {
            out.factors_.push_back(*a++);
        } else if (b->first < a->first) {
            out.factors_.push_back(*b++);
        } else {
            out.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.factors_.insert(out.factors_.end(), a, factors_.end());
    out.factors_.insert(out.factors_.end(), b, rhs.factors_.end());
    return out;
}

Monomial Monomial::divided_once_by(EntryVar v) const {
    Monomial out;
    out.factors_.reserve(factors_.size());
    bool found = false;
    for (const Factor& f : factors_) {
        if (f.first == v) {
            found = true;
            if (f.second > 1) out.factors_.emplace_back(f.first, f.second - 1);
        } else {
            out.factors_.push_back(f);
        }
    }
    if (!found) {
        throw internal_error("divided_once_by: " + v.str() + " does not occur");
    }
    return out;
}

std::strong_ordering Monomial::operator<=>(const Monomial& rhs) const noexcept {
    auto a = factors_.begin(), b = rhs.factors_.begin();
    while (a != factors_.end() && b != rhs.factors_.end()) {
        if (auto c = a->first <=> b->first; c != 0) return c;
        // Same variable: the higher power sorts first.
        if (auto c = b->second <=> a->second; c != 0) return c;
        ++a;
        ++b;
    }
    // A proper prefix sorts after its extensions (missing factor acts as a
    // +infinity sentinel), so higher-degree monomials lead.
    if (a != factors_.end()) return std::strong_ordering::less;
    if (b != rhs.factors_.end()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string out;
    for (const Factor& f : factors_) {
        if (!out.empty()) out += "*";
        out += f.first.str();
        if (f.second != 1) out += "^" + std::to_string(f.second);
    }
    return out;
}

} // namespace sylv

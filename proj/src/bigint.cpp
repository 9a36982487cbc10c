#include "sylv/bigint.hpp"

#include <cctype>

namespace sylv {

BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (b == 0) {
        throw internal_error("exact_div: division by zero");
    }
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) {
        throw internal_error("exact_div: nonzero remainder (" + a.get_str() +
                             " / " + b.get_str() + ")");
    }
    return q;
}

BigInt parse_bigint(const std::string& text) {
    std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
    if (start == text.size()) {
        throw parse_error("not a decimal integer: \"" + text + "\"");
    }
    for (std::size_t i = start; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i]))) {
            throw parse_error("not a decimal integer: \"" + text + "\"");
        }
    }
    return BigInt(text, 10);
}

} // namespace sylv

#ifndef SYLV_BIGINT_HPP
#define SYLV_BIGINT_HPP

#include <gmpxx.h>

#include <string>

#include "sylv/errors.hpp"

namespace sylv {

// Arbitrary-precision signed integer.  All coefficient and matrix-entry
// arithmetic in the library is exact.
using BigInt = mpz_class;

// Quotient a/b when b divides a exactly.  A nonzero remainder (or b == 0)
// throws internal_error: exactness of these divisions is a checked
// invariant, never an assumption.
BigInt exact_div(const BigInt& a, const BigInt& b);

// Parse a decimal integer with optional leading '-'.  Throws parse_error on
// anything else (whitespace, '+', empty string, non-digits).
BigInt parse_bigint(const std::string& text);

} // namespace sylv

#endif

#ifndef SYLV_ERRORS_HPP
#define SYLV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sylv {

// Base for all recoverable, user-facing errors (bad input, violated
// preconditions).
class error : public std::runtime_error {
public:
    explicit error(const std::string& msg) : std::runtime_error(msg) {}
};

class invalid_dimension : public error {
public:
    using error::error;
};

class index_out_of_range : public error {
public:
    using error::error;
};

class not_square : public error {
public:
    using error::error;
};

class unbound_variable : public error {
public:
    using error::error;
};

class not_generic : public error {
public:
    using error::error;
};

class invalid_index_pair : public error {
public:
    using error::error;
};

class dimension_too_small : public error {
public:
    using error::error;
};

class dimension_too_large : public error {
public:
    using error::error;
};

class zero_interior_minor : public error {
public:
    using error::error;
};

class pivot_breakdown : public error {
public:
    using error::error;
};

class parse_error : public error {
public:
    using error::error;
};

// Violated internal invariant (e.g. an inexact division during elimination).
// Deliberately not derived from sylv::error: this is a bug, not bad input.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace sylv

#endif

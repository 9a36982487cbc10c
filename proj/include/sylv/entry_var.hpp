#ifndef SYLV_ENTRY_VAR_HPP
#define SYLV_ENTRY_VAR_HPP

#include <compare>
#include <string>

#include "sylv/errors.hpp"

namespace sylv {

// The indeterminate a[row,col].  Indices are 1-based and the row-major
// order (1,1) < (1,2) < ... < (2,1) < ... is the variable order used for
// canonical monomial form.
class EntryVar {
public:
    EntryVar(int row, int col) : row_(row), col_(col) {
        if (row < 1 || col < 1) {
            throw index_out_of_range("entry variable indices are 1-based");
        }
    }

    int row() const noexcept { return row_; }
    int col() const noexcept { return col_; }

    friend auto operator<=>(const EntryVar&, const EntryVar&) = default;

    std::string str() const {
        return "a[" + std::to_string(row_) + "," + std::to_string(col_) + "]";
    }

private:
    int row_;
    int col_;
};

} // namespace sylv

#endif

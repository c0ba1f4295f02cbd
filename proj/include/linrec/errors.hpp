#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace linrec {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct division_by_zero : error {
    division_by_zero() : error("division by zero") {}
};

/// Text could not be parsed; `offset` is the byte position of the failure.
struct parse_error : error {
    std::size_t offset;
    parse_error(const std::string& msg, std::size_t off)
        : error(msg + " (byte " + std::to_string(off) + ")"), offset(off) {}
};

struct length_mismatch : error {
    length_mismatch(std::size_t a, std::size_t b)
        : error("term vectors have different lengths (" + std::to_string(a) +
                " vs " + std::to_string(b) + ")") {}
};

struct order_mismatch : error {
    order_mismatch(std::size_t a, std::size_t b)
        : error("truncated series have different orders (" + std::to_string(a) +
                " vs " + std::to_string(b) + ")") {}
};

struct zero_element : error {
    zero_element() : error("operation undefined for the zero element") {}
};

/// The characteristic polynomial has a factor with no roots in Q(i).
struct non_split_char_poly : error {
    std::string residual;
    explicit non_split_char_poly(const std::string& residual_factor)
        : error("characteristic polynomial does not split over Q(i); residual factor: " +
                residual_factor),
          residual(residual_factor) {}
};

/// The brute-force membership search box is too small for a sound verdict.
struct box_too_small : error {
    box_too_small(std::size_t needed, std::size_t got)
        : error("coordinate box too small for a sound membership verdict (need " +
                std::to_string(needed) + ", got " + std::to_string(got) + ")") {}
};

/// Internal consistency check failed; indicates a bug, not a user error.
struct verification_failure : error {
    explicit verification_failure(const std::string& what) : error("internal check failed: " + what) {}
};

} // namespace linrec

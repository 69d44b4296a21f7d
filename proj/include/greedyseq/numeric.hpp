#pragma once

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>

namespace greedyseq {

// All denominations, amounts and sequence terms are exact integers of
// arbitrary size; recurrence terms grow like lambda^n and overflow any
// fixed width quickly.
using bigint = boost::multiprecision::cpp_int;

// Root diagnostics only. Every bound that matters is certified with exact
// integer inequalities; the 50-digit floats never decide anything.
using real50 = boost::multiprecision::cpp_dec_float_50;

// Ceiling division for x >= 0, y > 0.
inline bigint ceil_div(const bigint& x, const bigint& y) {
    return (x + y - 1) / y;
}

inline bool fits_uint64(const bigint& v) {
    return v >= 0 && v <= bigint(std::numeric_limits<std::uint64_t>::max());
}

inline std::uint64_t to_uint64(const bigint& v) {
    return v.convert_to<std::uint64_t>();
}

// Parses a decimal integer; rejects junk with an invalid_params error.
bigint parse_bigint(std::string_view text);

std::string to_decimal(const bigint& v);

}  // namespace greedyseq

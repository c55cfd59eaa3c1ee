#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace valueset {

// Exact 128-bit count. Overflow and negative results throw instead of
// wrapping (std::overflow_error / std::range_error).
using WideCount = boost::multiprecision::checked_uint128_t;

// Unbounded signed integer and exact rational, used where bounds need
// differences of counts or fractional values.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline std::string to_string(const WideCount& c) { return c.str(); }

// JSON numbers for counts that fit in 64 bits, decimal strings otherwise.
inline nlohmann::json count_to_json(const WideCount& c)
{
    if (c <= std::numeric_limits<std::uint64_t>::max()) {
        return c.convert_to<std::uint64_t>();
    }
    return c.str();
}

}  // namespace valueset

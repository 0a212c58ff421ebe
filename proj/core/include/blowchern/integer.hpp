#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace blowchern {

/// Arbitrary-precision integer used for every coefficient in the library.
using Integer = boost::multiprecision::cpp_int;

/// Quotient rounded toward negative infinity. `b` must be nonzero.
Integer floor_div(const Integer& a, const Integer& b);

struct Bezout {
  Integer gcd;  // always >= 0
  Integer x;
  Integer y;  // x*a + y*b == gcd
};

Bezout extended_gcd(const Integer& a, const Integer& b);

std::optional<std::int64_t> to_int64(const Integer& value);

std::string to_string(const Integer& value);

}  // namespace blowchern

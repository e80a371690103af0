#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace ngring {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

// Mathematical floor: rat_floor(-5/8) == -1.
Int rat_floor(const Rat& r);
Int rat_ceil(const Rat& r);

bool is_integral(const Rat& r);

long to_long(const Int& v);
long rat_to_long(const Rat& r);

// Parses "a/b" or "a"; denominator must be positive after reduction.
Rat parse_rat(std::string_view s);

// Prints "a/b" for non-integral values, "a" otherwise.  Never decimals.
std::string rat_str(const Rat& r);

Int int_gcd(Int a, Int b);
Int int_lcm(const Int& a, const Int& b);

}  // namespace ngring

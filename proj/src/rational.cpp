#include "ngring/rational.hpp"

#include <limits>

namespace ngring {

Int rat_floor(const Rat& r) {
  Int n = num(r), d = den(r);
  Int q = n / d;
  if (n < 0 && q * d != n) --q;
  return q;
}

Int rat_ceil(const Rat& r) { return -rat_floor(-r); }

bool is_integral(const Rat& r) { return den(r) == 1; }

long to_long(const Int& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    throw std::overflow_error("integer out of long range: " + v.str());
  return static_cast<long>(v);
}

long rat_to_long(const Rat& r) {
  if (!is_integral(r)) throw std::invalid_argument("not an integer: " + rat_str(r));
  return to_long(num(r));
}

Rat parse_rat(std::string_view s) {
  auto bad = [&] { return std::invalid_argument("malformed rational \"" + std::string(s) + "\""); };
  if (s.empty()) throw bad();
  std::string text(s);
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int n(text.substr(0, slash));
    Int d(text.substr(slash + 1));
    if (d == 0) throw bad();
    if (d < 0) {
      n = -n;
      d = -d;
    }
    return Rat(n, d);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

std::string rat_str(const Rat& r) {
  if (is_integral(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

Int int_gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

Int int_lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::lcm(a, b);
}

}  // namespace ngring

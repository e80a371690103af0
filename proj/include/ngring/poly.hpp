#pragma once

#include <utility>
#include <vector>

#include "ngring/rational.hpp"

namespace ngring {

// Dense univariate polynomial over Q, coefficient of x^i at index i.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(Rat c);
  static Poly monomial(long deg, Rat c = Rat(1));
  // x - a
  static Poly linear_root(const Rat& a);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return c_; }
  Rat coeff(long i) const { return i >= 0 && i <= degree() ? c_[i] : Rat(0); }

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly& operator*=(const Rat& c);
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  // Quotient/remainder; divisor must be nonzero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  // Exact division; throws if the remainder is nonzero.
  Poly div_exact(const Poly& d) const;

  Poly derivative() const;
  Rat eval(const Rat& x) const;

  Poly pow(long e) const;

 private:
  void trim();
  std::vector<Rat> c_;
};

Poly poly_gcd(Poly a, Poly b);

bool is_squarefree(const Poly& p);

}  // namespace ngring

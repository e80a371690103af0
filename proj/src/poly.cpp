#include "ngring/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace ngring {

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::constant(Rat c) {
  Poly p;
  if (c != 0) p.c_ = {std::move(c)};
  return p;
}

Poly Poly::monomial(long deg, Rat c) {
  Poly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(deg) + 1, Rat(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

Poly Poly::linear_root(const Rat& a) { return Poly({-a, Rat(1)}); }

Poly Poly::operator+(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator-(const Poly& o) const {
  std::vector<Rat> r(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
  return Poly(std::move(r));
}

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  std::vector<Rat> r(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (o.c_[j] != 0) r[i + j] += c_[i] * o.c_[j];
  }
  return Poly(std::move(r));
}

Poly& Poly::operator*=(const Rat& c) {
  if (c == 0) {
    c_.clear();
  } else {
    for (auto& x : c_) x *= c;
  }
  return *this;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
  Poly rem = *this;
  long dd = d.degree();
  if (rem.degree() < dd) return {Poly(), rem};
  std::vector<Rat> q(static_cast<size_t>(rem.degree() - dd) + 1, Rat(0));
  const Rat& lead = d.c_.back();
  while (!rem.is_zero() && rem.degree() >= dd) {
    long k = rem.degree() - dd;
    Rat f = rem.c_.back() / lead;
    q[static_cast<size_t>(k)] = f;
    for (long i = 0; i <= dd; ++i) {
      rem.c_[static_cast<size_t>(k + i)] -= f * d.c_[static_cast<size_t>(i)];
    }
    rem.trim();
  }
  return {Poly(std::move(q)), rem};
}

Poly Poly::div_exact(const Poly& d) const {
  auto [q, r] = divmod(d);
  if (!r.is_zero()) throw std::logic_error("polynomial division was not exact");
  return q;
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return Poly();
  std::vector<Rat> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return Poly(std::move(r));
}

Rat Poly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::pow(long e) const {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  Poly acc = Poly::constant(Rat(1));
  Poly base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rat lead = a.coeffs().back();
    a *= Rat(1) / lead;
  }
  return a;
}

bool is_squarefree(const Poly& p) {
  if (p.is_zero()) return false;
  if (p.degree() == 0) return true;
  return poly_gcd(p, p.derivative()).degree() == 0;
}

}  // namespace ngring

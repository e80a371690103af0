#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "ngring/linalg.hpp"
#include "ngring/rational.hpp"
#include "ngring/verdict.hpp"

namespace ngring {

struct Monomial {
  std::array<long, 3> e{0, 0, 0};
  bool operator<(const Monomial& o) const { return e < o.e; }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

// k[X,Y,Z]/(V^k + tail) with positive weights, tail free of the designated
// variable V, everything weighted-homogeneous.  Normal form keeps the
// exponent of V below k.
class WeightedHypersurface {
 public:
  static WeightedHypersurface hyperelliptic(long genus);
  static WeightedHypersurface hyperelliptic_with_tail(
      long genus, std::vector<std::pair<Monomial, Rat>> tail);
  static WeightedHypersurface e8();
  static WeightedHypersurface custom(std::array<long, 3> weights, int designated, long power,
                                     std::vector<std::pair<Monomial, Rat>> tail);

  const std::array<long, 3>& weights() const { return w_; }
  long max_weight() const;
  int designated() const { return designated_; }
  long power() const { return k_; }
  const std::vector<std::pair<Monomial, Rat>>& tail() const { return tail_; }
  long relation_degree() const { return rel_degree_; }
  long a_invariant() const { return a_; }
  const std::array<std::string, 3>& names() const { return names_; }

  long weighted_degree(const Monomial& m) const;
  std::string monomial_str(const Monomial& m) const;
  std::string relation_str() const;

 private:
  WeightedHypersurface() = default;
  void validate() const;

  std::array<long, 3> w_{1, 1, 1};
  std::array<std::string, 3> names_{"X", "Y", "Z"};
  int designated_ = 2;
  long k_ = 2;
  std::vector<std::pair<Monomial, Rat>> tail_;
  long rel_degree_ = 0;
  long a_ = 0;
};

// All normal-form monomials of weighted degree n, sorted; the count is dim R_n.
std::vector<Monomial> graded_basis(const WeightedHypersurface& ring, long n);

// Subspace of R_degree in coordinates indexed by graded_basis(ring, degree).
struct Subspace {
  long degree = 0;
  RowSpan span;
};

Subspace full_space(const WeightedHypersurface& ring, long n);
Subspace zero_space(long n);

// Normal-form reduction of a product of two monomials.
std::vector<std::pair<Monomial, Rat>> reduce_product(const WeightedHypersurface& ring,
                                                     const Monomial& a, const Monomial& b);

Subspace product_span(const WeightedHypersurface& ring, const Subspace& a, const Subspace& b);

// Degreewise trace-ideal test for the Veronese subring R^(d).
NGVerdict veronese_ng(const WeightedHypersurface& ring, long d, long cap = 0);

}  // namespace ngring

#include <doctest.h>

#include <random>

#include "ngring/demazure.hpp"
#include "ngring/hypersurface.hpp"
#include "ngring/reproduce.hpp"

using namespace ngring;

TEST_CASE("preset shapes and a-invariants") {
  WeightedHypersurface g2 = WeightedHypersurface::hyperelliptic(2);
  CHECK(g2.weights() == std::array<long, 3>{1, 2, 5});
  CHECK(g2.a_invariant() == 2);
  WeightedHypersurface g5 = WeightedHypersurface::hyperelliptic(5);
  CHECK(g5.a_invariant() == 8);
  WeightedHypersurface e8 = WeightedHypersurface::e8();
  CHECK(e8.weights() == std::array<long, 3>{15, 10, 6});
  CHECK(e8.a_invariant() == -1);
  CHECK(e8.designated() == 0);
}

TEST_CASE("validator rejects degenerate relations") {
  // tail with a repeated root: u^2 v (as a form in (X^2, Y) of degree 3)
  std::vector<std::pair<Monomial, Rat>> bad;
  bad.push_back({Monomial{{4, 1, 0}}, Rat(1)});
  CHECK_THROWS_AS(WeightedHypersurface::hyperelliptic_with_tail(2, bad), std::invalid_argument);
  // X^10 + X^8 Y (divisible by X^8, also Y-free at no term): repeated roots
  std::vector<std::pair<Monomial, Rat>> bad2;
  bad2.push_back({Monomial{{10, 0, 0}}, Rat(1)});
  bad2.push_back({Monomial{{8, 1, 0}}, Rat(1)});
  CHECK_THROWS_AS(WeightedHypersurface::hyperelliptic_with_tail(2, bad2), std::invalid_argument);
  // wrong weighted degree
  std::vector<std::pair<Monomial, Rat>> bad3;
  bad3.push_back({Monomial{{1, 0, 0}}, Rat(1)});
  CHECK_THROWS_AS(WeightedHypersurface::custom({1, 2, 5}, 2, 2, bad3), std::invalid_argument);
}

TEST_CASE("graded_basis counts normal-form monomials") {
  WeightedHypersurface g2 = WeightedHypersurface::hyperelliptic(2);
  auto b5 = graded_basis(g2, 5);
  CHECK(b5.size() == 4);  // X^5, X^3 Y, X Y^2, Z
  bool has_z = false;
  for (const auto& m : b5)
    if (m.e == std::array<long, 3>{0, 0, 1}) has_z = true;
  CHECK(has_z);
  CHECK(graded_basis(g2, 0).size() == 1);
  CHECK(graded_basis(g2, -3).empty());

  WeightedHypersurface e8 = WeightedHypersurface::e8();
  CHECK(graded_basis(e8, 30).size() == 2);  // Y^3 and Z^5
  CHECK(graded_basis(e8, 1).empty());
}

TEST_CASE("hyperelliptic dimensions match the one-point h0 for n <= 6g") {
  for (long g = 2; g <= 5; ++g) {
    WeightedHypersurface ring = WeightedHypersurface::hyperelliptic(g);
    CurvePtr c = CurveModel::hyperelliptic_one_point(g);
    for (long n = 0; n <= 6 * g; ++n) {
      NatOrUnknown expected = h0(c, c->divisor_class(0, {{0, n}}));
      CHECK(static_cast<long>(graded_basis(ring, n).size()) == *expected);
    }
  }
}

TEST_CASE("e8 dimensions match the Demazure side for n <= 20, d <= 60") {
  WeightedHypersurface ring = WeightedHypersurface::e8();
  DemazurePair base = tables::e8_pair();
  for (long d = 1; d <= 60; ++d) {
    DemazurePair pair = veronese(base, d);
    for (long n = 0; n <= 20; ++n) {
      NatOrUnknown dim = graded_dim(pair, GradedPart::R, n);
      REQUIRE(dim.known());
      CHECK(static_cast<long>(graded_basis(ring, n * d).size()) == *dim);
    }
  }
}

TEST_CASE("product_span reduces by the relation") {
  WeightedHypersurface g2 = WeightedHypersurface::hyperelliptic(2);
  // Z * Z = -f(X^2, Y) = -(X^10 - Y^5)
  auto prods = reduce_product(g2, Monomial{{0, 0, 1}}, Monomial{{0, 0, 1}});
  REQUIRE(prods.size() == 2);
  std::map<Monomial, Rat> as_map(prods.begin(), prods.end());
  CHECK(as_map[Monomial{{10, 0, 0}}] == Rat(-1));
  CHECK(as_map[Monomial{{0, 5, 0}}] == Rat(1));

  Subspace unit = full_space(g2, 0);
  Subspace r5 = full_space(g2, 5);
  Subspace same = product_span(g2, r5, unit);
  CHECK(same.span.dim() == r5.span.dim());

  // dim(R_a * R_b) <= dim R_{a+b} always; equality once both factors contain
  // every generator (degrees >= 2g+1 on the hyperelliptic preset)
  for (long a = 1; a <= 8; ++a) {
    for (long b = a; b <= 8; ++b) {
      Subspace prod = product_span(g2, full_space(g2, a), full_space(g2, b));
      long full = static_cast<long>(graded_basis(g2, a + b).size());
      CHECK(prod.span.dim() <= full);
      if (a >= 5 && b >= 5) CHECK(prod.span.dim() == full);
    }
  }
}

TEST_CASE("product_span is commutative and associative on sampled spaces") {
  WeightedHypersurface e8 = WeightedHypersurface::e8();
  std::vector<long> degs{6, 10, 15, 12, 16};
  for (long a : degs) {
    for (long b : degs) {
      Subspace ab = product_span(e8, full_space(e8, a), full_space(e8, b));
      Subspace ba = product_span(e8, full_space(e8, b), full_space(e8, a));
      CHECK(ab.span.dim() == ba.span.dim());
      CHECK(ab.span.contains_all(ba.span));
      Subspace abc = product_span(e8, ab, full_space(e8, 6));
      Subspace bca = product_span(e8, product_span(e8, full_space(e8, b), full_space(e8, 6)),
                                  full_space(e8, a));
      CHECK(abc.span.dim() == bca.span.dim());
      CHECK(abc.span.contains_all(bca.span));
    }
  }
}

TEST_CASE("veronese_ng detects Gorenstein shifts exactly") {
  for (long g = 2; g <= 5; ++g) {
    WeightedHypersurface ring = WeightedHypersurface::hyperelliptic(g);
    for (long d = 1; d <= 4 * g + 4; ++d) {
      bool gor = veronese_ng(ring, d).kind == NGKind::Gorenstein;
      CHECK(gor == ((2 * g - 2) % d == 0));
    }
  }
}

TEST_CASE("the g=2 witness in degree 5 is Z") {
  WeightedHypersurface g2 = WeightedHypersurface::hyperelliptic(2);
  NGVerdict v = veronese_ng(g2, 5);
  CHECK(v.kind == NGKind::NotNearlyGorenstein);
  REQUIRE(v.witness_degree.has_value());
  CHECK(*v.witness_degree == 1);  // Z sits in R_5 = the first Veronese piece
  bool mentions_z = false;
  for (const auto& e : v.evidence)
    if (e.detail.find("Z") != std::string::npos) mentions_z = true;
  CHECK(mentions_z);
}

TEST_CASE("small hyperelliptic verdicts") {
  WeightedHypersurface g2 = WeightedHypersurface::hyperelliptic(2);
  CHECK(veronese_ng(g2, 7).kind == NGKind::NearlyGorensteinNotGorenstein);
  CHECK(veronese_ng(g2, 3).kind == NGKind::NearlyGorensteinNotGorenstein);
  CHECK(veronese_ng(g2, 6).kind == NGKind::NotNearlyGorenstein);
  WeightedHypersurface g3 = WeightedHypersurface::hyperelliptic(3);
  CHECK(veronese_ng(g3, 5).kind == NGKind::NearlyGorensteinNotGorenstein);
  CHECK(veronese_ng(g3, 7).kind == NGKind::NotNearlyGorenstein);
}

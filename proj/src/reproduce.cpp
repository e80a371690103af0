#include "ngring/reproduce.hpp"

#include <numeric>

#include "ngring/resolution.hpp"

namespace ngring::tables {

namespace {

CurvePtr p1_with(std::vector<std::pair<std::string, long>> pts) {
  std::vector<PointInfo> infos;
  for (auto& [label, coord] : pts) {
    PointInfo p;
    p.label = label;
    p.coord = Rat(coord);
    infos.push_back(p);
  }
  return CurveModel::projective_line(std::move(infos));
}

CurvePtr generic_curve(long g, BoolOrUnknown hyper, long n_generic, bool with_weierstrass = false) {
  std::vector<PointInfo> pts;
  for (long i = 1; i <= n_generic; ++i) {
    PointInfo p;
    p.label = "P" + std::to_string(i);
    pts.push_back(p);
  }
  if (with_weierstrass) {
    PointInfo w;
    w.label = "W";
    w.generic = false;
    w.weierstrass = true;
    pts.push_back(w);
  }
  return CurveModel::generic(g, hyper, std::move(pts));
}

}  // namespace

DemazurePair e8_pair() {
  CurvePtr c = p1_with({{"P0", 0}, {"P1", 1}, {"P2", 2}, {"P3", 3}});
  std::map<int, Rat> coeffs{{c->point_index("P0"), Rat(-1)},
                            {c->point_index("P1"), Rat(1, 2)},
                            {c->point_index("P2"), Rat(1, 3)},
                            {c->point_index("P3"), Rat(1, 5)}};
  return DemazurePair::make(QDivisor(c, std::move(coeffs)));
}

DemazurePair family_pair(long r, const Rat& pq) {
  std::vector<std::pair<std::string, long>> pts{{"Q", 0}};
  for (long i = 1; i <= r; ++i) pts.emplace_back("P" + std::to_string(i), i);
  CurvePtr c = p1_with(std::move(pts));
  std::map<int, Rat> coeffs{{c->point_index("Q"), Rat(r - 1)}};
  for (long i = 1; i <= r; ++i) coeffs[c->point_index("P" + std::to_string(i))] = -pq;
  return DemazurePair::make_unchecked(QDivisor(c, std::move(coeffs)));
}

std::vector<E8Row> e8_list() {
  std::vector<E8Row> rows;
  DemazurePair base = e8_pair();
  for (long d = 1; d <= 30; ++d) {
    if (std::gcd(d, 30L) != 1) continue;
    DemazurePair pair = veronese(base, d);
    NormalForm nf = normalize(pair.divisor());
    ResolutionGraph graph = blow_down(star_graph(nf, pair.curve()->genus()));
    rows.push_back(E8Row{d, mowy_ng(graph)});
  }
  return rows;
}

std::vector<HypRow> hyperelliptic_table(long genus) {
  std::vector<HypRow> rows;
  WeightedHypersurface ring = WeightedHypersurface::hyperelliptic(genus);
  for (long d = 1; d <= 4 * genus + 4; ++d)
    rows.push_back(HypRow{d, veronese_ng(ring, d).kind});
  return rows;
}

std::vector<FamilyRow> family_grid() {
  std::vector<FamilyRow> rows;
  const std::vector<Rat> fractions{Rat(1, 3), Rat(1, 2), Rat(4, 7),
                                   Rat(5, 8), Rat(2, 3), Rat(3, 4)};
  for (long r = 3; r <= 5; ++r) {
    for (const Rat& pq : fractions) {
      DemazurePair pair = family_pair(r, pq);
      FamilyRow row;
      row.r = r;
      row.pq = pq;
      row.type = singularity_type(pair);
      GradedRingProfile prof = invariants(pair);
      row.a = prof.a;
      row.pg = prof.pg;
      row.m = prof.m;
      row.dim_k1 = graded_dim(pair, GradedPart::K, 1);
      row.gorenstein = gorenstein_test(pair);
      if (pair.ample()) {
        row.ng = ng_decide(pair);
      } else {
        row.ng.kind = NGKind::Unknown;
        row.ng.evidence.push_back({"ample-check", "divisor is not ample"});
      }
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<ConeFixture> genus2_fixtures() {
  std::vector<ConeFixture> fx;
  auto K = [](const CurvePtr& c) { return c->canonical_class(); };
  auto pts = [](const CurvePtr& c, std::map<std::string, long> named) {
    std::map<int, long> out;
    for (auto& [l, v] : named) out[c->point_index(l)] = v;
    return out;
  };
  auto add = [&](std::string name, CurvePtr c, DivisorClass d, RuleKind expected,
                 std::set<std::string> flags = {}) {
    fx.push_back(ConeFixture{std::move(name), make_cone_input(c, std::move(d), std::move(flags)),
                             expected});
  };
  const auto NG = RuleKind::NearlyGorensteinNotGorenstein;
  const auto NN = RuleKind::NotNearlyGorenstein;

  {
    CurvePtr c = generic_curve(2, BoolOrUnknown(true), 6);
    add("deg1-generic-point", c, c->divisor_class(0, pts(c, {{"P1", 1}})), NN);
    add("deg2-two-points", c, c->divisor_class(0, pts(c, {{"P1", 1}, {"P2", 1}})), NN);
    add("deg2-canonical", c, K(c), RuleKind::Gorenstein);
    add("deg3-K+P", c, K(c) + c->divisor_class(0, pts(c, {{"P1", 1}})), NG);
    add("deg3-three-points", c, c->divisor_class(0, pts(c, {{"P1", 1}, {"P2", 1}, {"P3", 1}})), NN);
    add("deg4-2K", c, K(c).scaled(2), NG);
    add("deg4-K+P+Q", c, K(c) + c->divisor_class(0, pts(c, {{"P1", 1}, {"P2", 1}})), NN);
    add("deg5-flag-h0-zero", c, c->divisor_class(0, pts(c, {{"P1", 5}})),
        NG, {"h0(3K-D)=0"});
    add("deg5-3K-P", c, K(c).scaled(3) - c->divisor_class(0, pts(c, {{"P1", 1}})), NN);
    add("deg5-flag-h0-nonzero", c,
        c->divisor_class(0, pts(c, {{"P1", 1}, {"P2", 1}, {"P3", 1}, {"P4", 1}, {"P5", 1}})), NN,
        {"not:h0(3K-D)=0"});
    add("deg5-no-facts", c,
        c->divisor_class(0, pts(c, {{"P1", 2}, {"P2", 1}, {"P3", 1}, {"P4", 1}})),
        RuleKind::Unknown);
    add("deg6-3K", c, K(c).scaled(3), NN);
    add("deg6-2K+P+Q", c, K(c).scaled(2) + c->divisor_class(0, pts(c, {{"P1", 1}, {"P2", 1}})),
        NG);
    add("deg7-2K+3pts", c,
        K(c).scaled(2) + c->divisor_class(0, pts(c, {{"P1", 1}, {"P2", 1}, {"P3", 1}})), NG);
    add("deg8-4K", c, K(c).scaled(4), NG);
  }
  {
    CurvePtr h = CurveModel::hyperelliptic_one_point(2);
    auto dp = [&](long d) { return h->divisor_class(0, {{0, d}}); };
    add("hyp-d1-gorenstein", h, dp(1), RuleKind::Gorenstein);
    add("hyp-d2-gorenstein", h, dp(2), RuleKind::Gorenstein);
    add("hyp-d3", h, dp(3), NG);
    add("hyp-d4", h, dp(4), NG);
    add("hyp-d5", h, dp(5), NN);
    add("hyp-d6", h, dp(6), NN);
    add("hyp-d7", h, dp(7), NG);
  }
  return fx;
}

std::vector<ConeFixture> genus3_fixtures() {
  std::vector<ConeFixture> fx;
  auto pts = [](const CurvePtr& c, std::map<std::string, long> named) {
    std::map<int, long> out;
    for (auto& [l, v] : named) out[c->point_index(l)] = v;
    return out;
  };
  auto add = [&](std::string name, CurvePtr c, DivisorClass d, RuleKind expected,
                 std::set<std::string> flags = {}) {
    fx.push_back(ConeFixture{std::move(name), make_cone_input(c, std::move(d), std::move(flags)),
                             expected});
  };
  const auto NG = RuleKind::NearlyGorensteinNotGorenstein;
  const auto NN = RuleKind::NotNearlyGorenstein;

  CurvePtr c = generic_curve(3, BoolOrUnknown::unknown("not declared"), 6);
  CurvePtr nh = generic_curve(3, BoolOrUnknown(false), 6);  // non-hyperelliptic
  CurvePtr hp = CurveModel::hyperelliptic_one_point(3);
  auto K = [](const CurvePtr& cc) { return cc->canonical_class(); };
  auto dp = [&](long d) { return hp->divisor_class(0, {{0, d}}); };

  add("deg1-point", nh, nh->divisor_class(0, pts(nh, {{"P1", 1}})), NN);
  add("deg2-two-points", nh, nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}})), NN);
  add("hyp-d2-gorenstein", hp, dp(2), RuleKind::Gorenstein);
  add("hyp-d3-3P", hp, dp(3), NG);
  add("deg3-not-hyperelliptic", nh,
      nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}, {"P3", 1}})), NN);
  add("deg3-hyper-undeclared", c,
      c->divisor_class(0, pts(c, {{"P1", 1}, {"P2", 1}, {"P3", 1}})), RuleKind::Unknown);
  add("deg4-canonical", nh, K(nh), RuleKind::Gorenstein);
  add("deg4-four-points", nh,
      nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}, {"P3", 1}, {"P4", 1}})), NN);
  add("deg5-K+P", nh, K(nh) + nh->divisor_class(0, pts(nh, {{"P1", 1}})), NG);
  add("deg5-five-points", nh,
      nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}, {"P3", 1}, {"P4", 1}, {"P5", 1}})), NN);
  add("hyp-d5", hp, dp(5), NG);
  add("hyp-d6-6P", hp, dp(6), NG);
  add("deg6-not-hyperelliptic", nh, K(nh) + nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}})),
      NN);
  add("deg7-K+B-bpf", nh,
      K(nh) + nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}, {"P3", 1}})), NG,
      {"h0(D-K)=2", "bpf(D-K)"});
  add("deg7-K+B-base-point", nh,
      K(nh) + nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}, {"P3", 1}})), NN,
      {"h0(D-K)=2", "not:bpf(D-K)"});
  add("deg7-h0-not-2", nh,
      K(nh) + nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}, {"P3", 1}})), NN,
      {"not:h0(D-K)=2"});
  add("hyp-d7", hp, dp(7), NN);
  add("deg8-2K-not-hyperelliptic", nh, K(nh).scaled(2), NG);
  {
    CurvePtr hyp2k = generic_curve(3, BoolOrUnknown(true), 2);
    add("deg8-2K-hyperelliptic", hyp2k, hyp2k->canonical_class().scaled(2), NN);
  }
  add("deg8-K+4pts", nh,
      K(nh) + nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}, {"P3", 1}, {"P4", 1}})), NN);
  add("deg9-2K+P", nh, K(nh).scaled(2) + nh->divisor_class(0, pts(nh, {{"P1", 1}})), NN);
  add("deg9-flag-surjective", nh,
      K(nh) + nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}, {"P3", 1}, {"P4", 1}, {"P5", 1}})),
      NG, {"R1=K0*L1"});
  add("deg10-no-facts", nh,
      K(nh).scaled(2) + nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}})), RuleKind::Unknown);
  add("deg11-flag-not-surjective", nh,
      K(nh).scaled(2) + nh->divisor_class(0, pts(nh, {{"P1", 1}, {"P2", 1}, {"P3", 1}})), NN,
      {"not:R1=K0*L1"});
  add("hyp-d9", hp, dp(9), NN);
  add("hyp-d11", hp, dp(11), NG);
  add("deg12-3K", nh, K(nh).scaled(3), NG);
  add("deg13-3K+P", nh, K(nh).scaled(3) + nh->divisor_class(0, pts(nh, {{"P1", 1}})), NG);
  return fx;
}

std::vector<CompareFixture> comparison_fixtures() {
  std::vector<CompareFixture> fx;
  CurvePtr c = generic_curve(2, BoolOrUnknown(true), 6);
  CurvePtr hp = CurveModel::hyperelliptic_one_point(2);
  auto K = c->canonical_class();
  auto pts = [&](std::map<std::string, long> named) {
    std::map<int, long> out;
    for (auto& [l, v] : named) out[c->point_index(l)] = v;
    return out;
  };
  auto add = [&](std::string name, CurvePtr curve, DivisorClass d, std::string cat,
                 std::string case_id, std::set<std::string> flags = {}) {
    fx.push_back(CompareFixture{std::move(name),
                                make_cone_input(curve, std::move(d), std::move(flags)),
                                std::move(cat), std::move(case_id)});
  };
  add("deg3-K+P", c, K + c->divisor_class(0, pts({{"P1", 1}})), "ng-and-ag", "both:deg3-K+P");
  add("deg4-2K", c, K.scaled(2), "ng-and-ag", "both:2K");
  add("deg3-generated", c, c->divisor_class(0, pts({{"P1", 1}, {"P2", 1}, {"P3", 1}})), "neither",
      "neither:deg3-generated");
  add("deg5-3K-P", c, K.scaled(3) - c->divisor_class(0, pts({{"P1", 1}})), "neither",
      "neither:deg5-3K-P");
  add("deg6-3K", c, K.scaled(3), "neither", "neither:deg6-3K");
  add("gorenstein-point", hp, hp->divisor_class(0, {{0, 1}}), "gorenstein", "");
  add("deg2-ag-only", c, c->divisor_class(0, pts({{"P1", 1}, {"P2", 1}})), "ag-only", "");
  add("deg7-ng-only", c, K.scaled(2) + c->divisor_class(0, pts({{"P1", 1}, {"P2", 1}, {"P3", 1}})),
      "ng-only", "");
  add("deg5-ng-only-flag", c,
      c->divisor_class(0, pts({{"P1", 1}, {"P2", 1}, {"P3", 1}, {"P4", 1}, {"P5", 1}})), "ng-only",
      "", {"h0(3K-D)=0"});
  add("deg4-neither-unlisted", c, K + c->divisor_class(0, pts({{"P1", 1}, {"P2", 1}})), "neither",
      "");
  return fx;
}

}  // namespace ngring::tables

// Acceptance suite: runs every criterion and prints one pass/fail line each.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "ngring/cone_rules.hpp"
#include "ngring/demazure.hpp"
#include "ngring/hypersurface.hpp"
#include "ngring/linalg.hpp"
#include "ngring/reproduce.hpp"
#include "ngring/resolution.hpp"

using namespace ngring;

namespace {

int failures = 0;
std::vector<std::string> notes;

void note(const std::string& s) { notes.push_back(s); }

bool expect(bool ok, const std::string& what) {
  if (!ok) note("FAILED: " + what);
  return ok;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(int idx, const std::string& name, bool ok, double secs) {
  std::printf("criterion %d [%s]: %s (%.2fs)\n", idx, name.c_str(), ok ? "PASS" : "FAIL", secs);
  for (const auto& n : notes) std::printf("    %s\n", n.c_str());
  notes.clear();
  std::fflush(stdout);
  if (!ok) ++failures;
}

// Pairs touched by the suite, re-checked against the a/b/m relations at the end.
std::vector<DemazurePair> touched_pairs;

void touch(const DemazurePair& pair) {
  if (pair.ample()) touched_pairs.push_back(pair);
}

// ---------------------------------------------------------------------------

bool criterion_e8_list() {
  bool ok = true;
  const std::set<long> expected{1, 7, 11, 17, 19, 29};
  auto rows = tables::e8_list();
  std::set<long> got;
  long total = 0;
  for (const auto& r : rows) {
    ++total;
    if (r.ng) got.insert(r.d);
  }
  ok &= expect(total == 8, "eight Veronese indices coprime to 30 up to 30");
  if (got != expected) {
    std::ostringstream os;
    os << "NG set mismatch, got {";
    for (long d : got) os << d << " ";
    os << "}";
    ok &= expect(false, os.str());
  }
  DemazurePair base = tables::e8_pair();
  for (long d = 1; d <= 30; ++d)
    if (std::gcd(d, 30L) == 1) touch(veronese(base, d));
  return ok;
}

// ---------------------------------------------------------------------------

bool criterion_family_grid() {
  bool ok = true;
  auto key = [](long r, const Rat& pq) { return rat_str(pq) + "@" + std::to_string(r); };

  std::map<std::string, bool> expected_gorenstein;
  for (long r : {3L, 4L, 5L}) expected_gorenstein[key(r, Rat(1, 3))] = false;
  expected_gorenstein[key(3, Rat(1, 2))] = true;
  expected_gorenstein[key(4, Rat(1, 2))] = false;
  expected_gorenstein[key(5, Rat(1, 2))] = false;
  for (long r : {3L, 4L, 5L}) expected_gorenstein[key(r, Rat(4, 7))] = true;
  expected_gorenstein[key(3, Rat(5, 8))] = true;
  expected_gorenstein[key(4, Rat(5, 8))] = false;
  expected_gorenstein[key(5, Rat(5, 8))] = false;
  expected_gorenstein[key(4, Rat(2, 3))] = true;
  expected_gorenstein[key(5, Rat(2, 3))] = true;
  expected_gorenstein[key(5, Rat(3, 4))] = true;

  std::map<std::string, NGKind> expected_ng;
  for (const auto& [k, gor] : expected_gorenstein)
    if (gor) expected_ng[k] = NGKind::Gorenstein;
  for (long r : {3L, 4L, 5L}) expected_ng[key(r, Rat(1, 3))] = NGKind::NearlyGorensteinNotGorenstein;
  expected_ng[key(4, Rat(1, 2))] = NGKind::NearlyGorensteinNotGorenstein;
  expected_ng[key(5, Rat(1, 2))] = NGKind::NearlyGorensteinNotGorenstein;
  expected_ng[key(4, Rat(5, 8))] = NGKind::NearlyGorensteinNotGorenstein;
  expected_ng[key(5, Rat(5, 8))] = NGKind::NearlyGorensteinNotGorenstein;

  for (const auto& row : tables::family_grid()) {
    const std::string k = key(row.r, row.pq);
    DemazurePair pair = tables::family_pair(row.r, row.pq);
    touch(pair);
    bool ample = pair.ample();

    // singularity type: rational iff p/q <= 1/2, elliptic iff 1/2 < p/q <= 2/3
    SingType want_type = row.pq <= Rat(1, 2)    ? SingType::Rational
                         : row.pq <= Rat(2, 3) ? SingType::Elliptic
                                                : SingType::Other;
    ok &= expect(row.type.known() && *row.type == want_type, "type at " + k);

    if (ample) {
      ok &= expect(row.gorenstein.known() &&
                       *row.gorenstein == expected_gorenstein.at(k),
                   "gorenstein at " + k);
      ok &= expect(row.dim_k1.known() && *row.dim_k1 == row.r - 2, "dim K_1 = r-2 at " + k);
      auto it = expected_ng.find(k);
      if (it != expected_ng.end())
        ok &= expect(row.ng.kind == it->second, "ng verdict at " + k);
      if (want_type == SingType::Elliptic) {
        ok &= expect(row.m.known() && *row.m == 3, "m = 3 at elliptic cell " + k);
        DemazurePair p2 = tables::family_pair(row.r, row.pq);
        NatOrUnknown r3 = graded_dim(p2, GradedPart::R, 3);
        ok &= expect(r3.known() && *r3 == row.r - 2, "dim R_3 = r-2 at " + k);
        if (row.r >= 4)
          ok &= expect(row.a.known() && *row.a == 2 && row.pg.known() && *row.pg == 1,
                       "a = 2, p_g = 1 at " + k);
      }
    }
  }
  // the pinned invariant values of the r = 3 windows
  {
    auto rows = tables::family_grid();
    for (const auto& row : rows) {
      if (row.r == 3 && row.pq == Rat(4, 7)) {
        bool good = row.a.known() && *row.a == 2 && row.pg.known() && *row.pg == 1;
        ok &= expect(good, "r=3, p/q=4/7 has a=2, p_g=1");
      }
      if (row.r == 3 && row.pq == Rat(5, 8)) {
        bool good = row.a.known() && *row.a == 5 && row.pg.known() && *row.pg == 2;
        ok &= expect(good, "r=3, p/q=5/8 has a=5, p_g=2");
      }
    }
  }
  // q=5, p=3 from the odd-q rule: Gorenstein with a = 2 (outside the grid)
  for (long r : {3L, 4L, 5L}) {
    DemazurePair p = tables::family_pair(r, Rat(3, 5));
    touch(p);
    BoolOrUnknown gor = gorenstein_test(p);
    GradedRingProfile prof = invariants(p);
    ok &= expect(gor.known() && *gor, "q=5, p=3 Gorenstein at r=" + std::to_string(r));
    ok &= expect(prof.a.known() && *prof.a == 2, "q=5, p=3 has a=2 at r=" + std::to_string(r));
  }
  return ok;
}

// ---------------------------------------------------------------------------

bool criterion_remark_10_17() {
  bool ok = true;
  for (long r : {3L, 4L}) {
    DemazurePair p = tables::family_pair(r, Rat(10, 17));
    touch(p);
    NGVerdict v = ng_decide(p);
    ok &= expect(v.kind == NGKind::NotNearlyGorenstein,
                 "10/17 not nearly Gorenstein at r=" + std::to_string(r));
    ok &= expect(v.witness_degree.has_value() && *v.witness_degree == 5,
                 "10/17 witness degree 5 at r=" + std::to_string(r));
    for (long n = 1; n <= 4; ++n) {
      NatOrUnknown dim = graded_dim(p, GradedPart::Kinv, n);
      ok &= expect(dim.known() && *dim == 0,
                   "Kinv vanishes in degree " + std::to_string(n) + " at r=" + std::to_string(r));
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------

bool criterion_hyperelliptic_tables() {
  bool ok = true;
  auto ng_set = [](long g) -> std::function<bool(long)> {
    switch (g) {
      case 2:
        return [](long d) { return d == 3 || d == 4 || d >= 7; };
      case 3:
        return [](long d) { return (d >= 3 && d <= 6) || d >= 11; };
      case 4:
        return [](long d) { return d == 3 || d == 4 || d == 5 || d == 7 || d == 8 || d >= 15; };
      case 5:
        return [](long d) { return (d <= 10 && d != 6) || d >= 19; };
      default:
        return [](long) { return false; };
    }
  };
  for (long g = 2; g <= 5; ++g) {
    auto in_ng = ng_set(g);
    for (const auto& row : tables::hyperelliptic_table(g)) {
      NGKind want;
      if ((2 * g - 2) % row.d == 0)
        want = NGKind::Gorenstein;
      else if (in_ng(row.d))
        want = NGKind::NearlyGorensteinNotGorenstein;
      else
        want = NGKind::NotNearlyGorenstein;
      if (row.verdict != want) {
        ok &= expect(false, "hyperelliptic g=" + std::to_string(g) + ", d=" +
                                std::to_string(row.d) + ": got " + ng_kind_str(row.verdict) +
                                ", want " + ng_kind_str(want));
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------------------

bool criterion_rule_engine() {
  bool ok = true;
  auto fx2 = tables::genus2_fixtures();
  auto fx3 = tables::genus3_fixtures();
  ok &= expect(fx2.size() >= 15, "at least 15 genus-2 fixtures");
  ok &= expect(fx3.size() >= 15, "at least 15 genus-3 fixtures");
  for (const auto& f : fx2) {
    RuleVerdict v = classify_cone(f.input);
    if (v.kind != f.expected)
      ok &= expect(false, "genus-2 fixture " + f.name + ": got " + rule_kind_str(v.kind));
  }
  for (const auto& f : fx3) {
    RuleVerdict v = classify_cone(f.input);
    if (v.kind != f.expected)
      ok &= expect(false, "genus-3 fixture " + f.name + ": got " + rule_kind_str(v.kind));
  }
  // the closing example must fire on its dedicated rule
  CurvePtr c = CurveModel::generic(3, BoolOrUnknown(false), {PointInfo{.label = "P"}});
  RuleVerdict v = classify_cone(make_cone_input(
      c, c->canonical_class().scaled(2) + c->divisor_class(0, {{0, 1}})));
  ok &= expect(v.kind == RuleKind::NotNearlyGorenstein, "g=3, D = 2K+P is not nearly Gorenstein");
  return ok;
}

// ---------------------------------------------------------------------------

bool criterion_comparison() {
  bool ok = true;
  auto fixtures = tables::comparison_fixtures();
  bool saw[5] = {false, false, false, false, false};
  for (const auto& f : fixtures) {
    ComparisonReport r = compare_ng_ag_g2(f.input);
    if (r.category != f.expected_category || r.case_id != f.expected_case)
      ok &= expect(false, "comparison fixture " + f.name + ": got " + r.category + "/" +
                              r.case_id);
    if (r.case_id == "both:deg3-K+P") saw[0] = true;
    if (r.case_id == "both:2K") saw[1] = true;
    if (r.case_id == "neither:deg3-generated") saw[2] = true;
    if (r.case_id == "neither:deg5-3K-P") saw[3] = true;
    if (r.case_id == "neither:deg6-3K") saw[4] = true;
  }
  for (int i = 0; i < 5; ++i)
    ok &= expect(saw[i], "comparison case list item " + std::to_string(i) + " exercised");
  return ok;
}

// ---------------------------------------------------------------------------
// criterion 7: property suites

bool property_duality(std::mt19937_64& rng) {
  bool ok = true;
  auto check_model = [&](const CurvePtr& c, int& counted) {
    DivisorClass e = [&] {
      std::uniform_int_distribution<long> kc(-3, 3);
      std::uniform_int_distribution<long> coef(-4, 4);
      std::map<int, long> pts;
      for (int i = 0; i < c->point_count(); ++i)
        if (rng() % 3 != 0) pts[i] = coef(rng);
      return DivisorClass(c, c->kind() == CurveKind::Elliptic ? 0 : kc(rng), std::move(pts));
    }();
    NatOrUnknown a = h0(c, e), b = h1(c, e);
    if (a.known() && b.known()) {
      if (*a - *b != e.degree() + 1 - c->genus()) return false;
      ++counted;
    }
    return true;
  };
  int np1 = 0, nell = 0, nhyp = 0, ngen = 0;
  for (int t = 0; t < 500; ++t) {
    {
      std::vector<PointInfo> pts;
      long n = 1 + static_cast<long>(rng() % 5);
      for (long i = 0; i < n; ++i)
        pts.push_back(PointInfo{.label = "A" + std::to_string(i), .coord = Rat(i)});
      ok &= check_model(CurveModel::projective_line(std::move(pts)), np1);
    }
    {
      std::vector<PointInfo> pts(1 + rng() % 4);
      for (size_t i = 0; i < pts.size(); ++i) pts[i].label = "E" + std::to_string(i);
      pts[0].origin = true;
      ok &= check_model(CurveModel::elliptic(std::move(pts)), nell);
    }
    ok &= check_model(CurveModel::hyperelliptic_one_point(2 + static_cast<long>(rng() % 4)), nhyp);
    {
      std::vector<PointInfo> pts(1 + rng() % 4);
      for (size_t i = 0; i < pts.size(); ++i) pts[i].label = "G" + std::to_string(i);
      ok &= check_model(
          CurveModel::generic(2 + static_cast<long>(rng() % 3),
                              BoolOrUnknown::unknown("nd"), std::move(pts)),
          ngen);
    }
  }
  ok &= expect(np1 == 500 && nhyp == 500, "P1 and hyperelliptic duality always decidable");
  ok &= expect(nell > 100 && ngen > 100, "enough decidable elliptic/generic duality samples");
  return expect(ok, "duality h0 - h1 = deg + 1 - g");
}

bool property_quasi_periodicity(std::mt19937_64& rng) {
  for (int t = 0; t < 200; ++t) {
    long n_pts = 1 + static_cast<long>(rng() % 5);
    std::vector<PointInfo> pts;
    for (long i = 0; i < n_pts; ++i)
      pts.push_back(PointInfo{.label = "A" + std::to_string(i), .coord = Rat(i)});
    CurvePtr c = CurveModel::projective_line(std::move(pts));
    std::map<int, Rat> coeffs;
    std::uniform_int_distribution<long> numer(-12, 12);
    std::uniform_int_distribution<long> denom(1, 8);
    for (int i = 0; i < c->point_count(); ++i)
      if (rng() % 4) coeffs[i] = Rat(numer(rng), denom(rng));
    QDivisor d(c, coeffs);
    long qstar = to_long(d.denominator_lcm());
    for (long n = -2; n <= 3; ++n) {
      IntegralDivisor lhs = round_down(d.scaled(Rat(n + qstar)));
      IntegralDivisor rhs = round_down(d.scaled(Rat(n))) + round_down(d.scaled(Rat(qstar)));
      if (lhs.coefficients() != rhs.coefficients())
        return expect(false, "round_down quasi-periodicity");
    }
  }
  return true;
}

// all star graphs with <= 8 vertices and weights >= -5, arm weight tuples
// deduplicated across equal-length arms
struct StarOracle {
  std::vector<long> weight;                 // index 0 = center
  std::vector<std::vector<long>> adjacency; // neighbour indices

  long pairing_row(const std::vector<long>& z, size_t v) const {
    long acc = weight[v] * z[v];
    for (long u : adjacency[v]) acc += z[static_cast<size_t>(u)];
    return acc;
  }
  bool anti_nef(const std::vector<long>& z) const {
    for (size_t v = 0; v < weight.size(); ++v)
      if (pairing_row(z, v) > 0) return false;
    return true;
  }
  // fraction-free determinant test on -M: all leading pivots positive
  bool negative_definite() const {
    size_t n = weight.size();
    long long m[8][8] = {};
    for (size_t i = 0; i < n; ++i) {
      m[i][i] = -weight[i];
      for (long u : adjacency[i]) m[i][static_cast<size_t>(u)] = -1;
    }
    long long prev = 1;
    for (size_t k = 0; k < n; ++k) {
      if (m[k][k] <= 0) return false;
      for (size_t i = k + 1; i < n; ++i) {
        for (size_t j = k + 1; j < n; ++j)
          m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        m[i][k] = 0;
      }
      prev = m[k][k];
    }
    return true;
  }
};

bool property_fundamental_cycles() {
  long graphs_checked = 0;
  long skipped_boxes = 0;
  // arm length partitions of v-1 for every total vertex count v <= 8
  std::vector<std::vector<long>> partitions;
  for (long total = 1; total <= 8; ++total) {
    std::vector<long> acc;
    std::function<void(long, long)> rec = [&](long left, long maxpart) {
      if (left == 0) {
        partitions.push_back(acc);
        return;
      }
      for (long p = std::min(left, maxpart); p >= 1; --p) {
        acc.push_back(p);
        rec(left - p, p);
        acc.pop_back();
      }
    };
    rec(total - 1, total - 1);
  }

  bool ok = true;
  for (const auto& arms : partitions) {
    size_t v = 1 + static_cast<size_t>(std::accumulate(arms.begin(), arms.end(), 0L));
    StarOracle oracle;
    oracle.weight.assign(v, 0);
    oracle.adjacency.assign(v, {});
    std::vector<std::pair<size_t, size_t>> arm_ranges;  // [first, last] vertex of each arm
    {
      size_t next = 1;
      for (long len : arms) {
        size_t prev = 0;
        size_t first = next;
        for (long k = 0; k < len; ++k) {
          oracle.adjacency[prev].push_back(static_cast<long>(next));
          oracle.adjacency[next].push_back(static_cast<long>(prev));
          prev = next++;
        }
        arm_ranges.emplace_back(first, next - 1);
      }
    }
    auto arm_leq = [&](size_t a, size_t b) {
      // lexicographic comparison of the weight tuples of two equal-length arms
      size_t la = arm_ranges[a].first, lb = arm_ranges[b].first;
      for (size_t k = 0; la + k <= arm_ranges[a].second; ++k) {
        if (oracle.weight[la + k] != oracle.weight[lb + k])
          return oracle.weight[la + k] < oracle.weight[lb + k];
      }
      return true;
    };

    std::function<void(size_t)> enumerate = [&](size_t idx) {
      if (!ok) return;
      if (idx == v) {
        // canonical representative: equal-length arms carry sorted weight tuples
        for (size_t a = 0; a + 1 < arm_ranges.size(); ++a) {
          size_t len_a = arm_ranges[a].second - arm_ranges[a].first;
          size_t len_b = arm_ranges[a + 1].second - arm_ranges[a + 1].first;
          if (len_a == len_b && !arm_leq(a, a + 1)) return;
        }
        if (!oracle.negative_definite()) return;

        std::vector<GraphVertex> verts;
        std::vector<std::pair<int, int>> edges;
        for (size_t i = 0; i < v; ++i) {
          verts.push_back(GraphVertex{static_cast<int>(i), oracle.weight[i], 0});
          for (long u : oracle.adjacency[i])
            if (u > static_cast<long>(i)) edges.emplace_back(static_cast<int>(i), u);
        }
        ResolutionGraph g(verts, edges);
        if (!is_negative_definite(g)) {
          ok = expect(false, "library/oracle negative-definiteness mismatch");
          return;
        }
        Cycle zf_map = fundamental_cycle(g);
        std::vector<long> zf(v);
        for (const auto& [id, c] : zf_map) zf[static_cast<size_t>(id)] = c;
        if (!oracle.anti_nef(zf)) {
          ok = expect(false, "Z_f not anti-nef");
          return;
        }
        // Any anti-nef cycle strictly under Z_f would contradict minimality,
        // and the coefficientwise min of two anti-nef cycles is anti-nef, so
        // searching the sub-box of Z_f (capped at 8) is a complete check.
        // DFS over the box; a vertex condition is tested as soon as its
        // closed neighbourhood is assigned.
        std::vector<long> caps(v);
        for (size_t i = 0; i < v; ++i) caps[i] = std::min(zf[i], 8L);
        std::vector<size_t> checkable_after(v, 0);
        std::vector<long> parent(v, -1);
        std::vector<bool> interior(v, false);
        checkable_after[0] = 0;
        for (const auto& [first, last] : arm_ranges) {
          checkable_after[0] = std::max(checkable_after[0], first);
          for (size_t i = first; i <= last; ++i) {
            checkable_after[i] = std::min(i + 1, last);
            parent[i] = i == first ? 0 : static_cast<long>(i) - 1;
            interior[i] = i < last;
          }
        }
        std::vector<long> z(v, 1);
        std::function<void(size_t)> dfs = [&](size_t idx) {
          if (!ok) return;
          if (idx == v) {
            if (z != zf) ok = expect(false, "anti-nef cycle below Z_f found");
            return;
          }
          long lo = 1;
          if (idx == 0) {
            // w0 z0 + (one per arm) <= 0 is necessary
            lo = std::max(lo, (static_cast<long>(arm_ranges.size()) - oracle.weight[0] - 1) /
                                  (-oracle.weight[0]));
          } else if (interior[idx]) {
            // w z + z_parent + (child >= 1) <= 0 is necessary
            long zp = z[static_cast<size_t>(parent[idx])];
            lo = std::max(lo, (zp + 1 - oracle.weight[idx] - 1) / (-oracle.weight[idx]));
          }
          for (long c = lo; c <= caps[idx]; ++c) {
            z[idx] = c;
            bool feasible = true;
            for (size_t u = 0; u < v && feasible; ++u)
              if (checkable_after[u] == idx && oracle.pairing_row(z, u) > 0) feasible = false;
            if (feasible) dfs(idx + 1);
          }
          z[idx] = 1;
        };
        dfs(0);
        ++graphs_checked;
        return;
      }
      long hi = idx == 0 ? -1 : -2;
      for (long weight = -5; weight <= hi; ++weight) {
        oracle.weight[idx] = weight;
        enumerate(idx + 1);
      }
    };
    enumerate(0);
    if (!ok) break;
  }
  note("negative-definite star graphs checked: " + std::to_string(graphs_checked));
  ok &= expect(skipped_boxes == 0, "no graph skipped the minimality box scan");
  ok &= expect(graphs_checked > 10000, "enough star graphs enumerated");
  return ok;
}

bool property_hj_roundtrip() {
  for (long q = 2; q <= 50; ++q)
    for (long p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      auto bs = hj_expand(q, p);
      for (long b : bs)
        if (b < 2) return expect(false, "hj entry below 2");
      if (hj_evaluate(bs) != Rat(q, p)) return expect(false, "hj round-trip");
    }
  return true;
}

bool property_cross_oracles() {
  bool ok = true;
  {
    WeightedHypersurface ring = WeightedHypersurface::e8();
    DemazurePair base = tables::e8_pair();
    for (long d = 1; d <= 60 && ok; ++d) {
      DemazurePair pair = veronese(base, d);
      for (long n = 0; n <= 20; ++n) {
        NatOrUnknown dim = graded_dim(pair, GradedPart::R, n);
        if (!dim.known() ||
            *dim != static_cast<long>(graded_basis(ring, n * d).size())) {
          ok = expect(false, "e8 dimension mismatch at d=" + std::to_string(d) +
                                 ", n=" + std::to_string(n));
          break;
        }
      }
    }
  }
  for (long g = 2; g <= 5 && ok; ++g) {
    WeightedHypersurface ring = WeightedHypersurface::hyperelliptic(g);
    CurvePtr c = CurveModel::hyperelliptic_one_point(g);
    for (long n = 0; n <= 6 * g; ++n) {
      NatOrUnknown expected = h0(c, c->divisor_class(0, {{0, n}}));
      if (static_cast<long>(graded_basis(ring, n).size()) != *expected) {
        ok = expect(false, "hyperelliptic count mismatch at g=" + std::to_string(g) +
                               ", n=" + std::to_string(n));
        break;
      }
    }
  }
  return ok;
}

bool property_trace_ideal(std::mt19937_64& rng) {
  auto product_into = [](const FunctionSpace& a, const FunctionSpace& b,
                         const FunctionSpace& target, RowSpan& out) {
    if (a.dim() == 0 || b.dim() == 0) return;
    Poly den = a.denominator * b.denominator;
    for (const auto& pa : a.basis_numerators)
      for (const auto& pb : b.basis_numerators)
        out.insert(sparse_from_dense((pa * pb * target.denominator).div_exact(den).coeffs()));
  };
  int seen = 0;
  while (seen < 50) {
    long n_pts = 2 + static_cast<long>(rng() % 3);
    std::vector<PointInfo> pts;
    for (long i = 0; i < n_pts; ++i)
      pts.push_back(PointInfo{.label = "A" + std::to_string(i), .coord = Rat(i)});
    CurvePtr c = CurveModel::projective_line(std::move(pts));
    std::map<int, Rat> coeffs;
    std::uniform_int_distribution<long> numer(-6, 6);
    std::uniform_int_distribution<long> denom(1, 4);
    for (int i = 0; i < c->point_count(); ++i)
      if (rng() % 4) coeffs[i] = Rat(numer(rng), denom(rng));
    QDivisor d(c, coeffs);
    if (!(d.degree() > 0)) continue;
    DemazurePair pair = DemazurePair::make(d);
    touch(pair);
    GradedRingProfile prof = invariants(pair);
    long a = *prof.a, b = *prof.b;
    long n = *prof.m + static_cast<long>(rng() % 3);
    long i = 1 + static_cast<long>(rng() % 3);

    FunctionSpace target_n1 = section_space(pair, GradedPart::R, n + i);
    RowSpan tr_ni;
    for (long j = -a; j <= n + i - b; ++j)
      product_into(section_space(pair, GradedPart::K, j),
                   section_space(pair, GradedPart::Kinv, n + i - j), target_n1, tr_ni);
    RowSpan moved;
    FunctionSpace ri = section_space(pair, GradedPart::R, i);
    for (long j = -a; j <= n - b; ++j) {
      FunctionSpace kj = section_space(pair, GradedPart::K, j);
      FunctionSpace lnj = section_space(pair, GradedPart::Kinv, n - j);
      if (kj.dim() == 0 || lnj.dim() == 0 || ri.dim() == 0) continue;
      Poly den = kj.denominator * lnj.denominator * ri.denominator;
      for (const auto& pa : kj.basis_numerators)
        for (const auto& pb : lnj.basis_numerators)
          for (const auto& pr : ri.basis_numerators)
            moved.insert(sparse_from_dense(
                (pa * pb * pr * target_n1.denominator).div_exact(den).coeffs()));
    }
    if (!tr_ni.contains_all(moved))
      return expect(false, "R_i Tr_n escaped Tr_{n+i} at sample " + std::to_string(seen));
    ++seen;
  }
  return true;
}

bool property_prop22() {
  bool ok = true;
  for (const auto& pair : touched_pairs) {
    GradedRingProfile prof = invariants(pair);
    BoolOrUnknown gor = gorenstein_test(pair);
    if (!(prof.a.known() && prof.b.known() && prof.m.known() && gor.known())) continue;
    long a = *prof.a, b = *prof.b, m = *prof.m;
    if (-a + b < 0) ok &= expect(false, "-a + b < 0 at " + pair.divisor().describe());
    if (!*gor && -a + b < m)
      ok &= expect(false, "-a + b < m without freeness at " + pair.divisor().describe());
    if (pair.curve()->kind() != CurveKind::ProjectiveLine) continue;
    NGVerdict v = ng_decide(pair);
    if (v.kind == NGKind::NearlyGorensteinNotGorenstein) {
      if (-a + b != m)
        ok &= expect(false, "NG pair with -a + b != m at " + pair.divisor().describe());
      // product subspace K_{-a} Kinv_b must be all of R_m
      FunctionSpace k = section_space(pair, GradedPart::K, -a);
      FunctionSpace l = section_space(pair, GradedPart::Kinv, b);
      FunctionSpace rm = section_space(pair, GradedPart::R, m);
      RowSpan span;
      Poly den = k.denominator * l.denominator;
      for (const auto& pa : k.basis_numerators)
        for (const auto& pb : l.basis_numerators)
          span.insert(sparse_from_dense((pa * pb * rm.denominator).div_exact(den).coeffs()));
      if (span.dim() != rm.dim())
        ok &= expect(false, "K_{-a} Kinv_b != R_m at " + pair.divisor().describe());
    }
  }
  note("pairs checked against the a/b/m relations: " + std::to_string(touched_pairs.size()));
  return ok;
}

bool criterion_properties() {
  std::mt19937_64 rng(0x5eed);
  bool ok = true;
  ok &= property_duality(rng);
  ok &= property_quasi_periodicity(rng);
  ok &= property_hj_roundtrip();
  ok &= property_fundamental_cycles();
  ok &= property_cross_oracles();
  ok &= property_trace_ideal(rng);
  ok &= property_prop22();
  return ok;
}

}  // namespace

int main() {
  struct Item {
    const char* name;
    std::function<bool()> fn;
    double limit_secs;
  };
  const Item items[] = {
      {"e8-veronese-list", criterion_e8_list, 5.0},
      {"family-example-grid", criterion_family_grid, 60.0},
      {"remark-10-17", criterion_remark_10_17, 0.0},
      {"hyperelliptic-veronese-tables", criterion_hyperelliptic_tables, 600.0},
      {"genus-2-3-rule-engine", criterion_rule_engine, 0.0},
      {"comparison-theorem", criterion_comparison, 0.0},
      {"property-suites", criterion_properties, 0.0},
  };
  int idx = 0;
  for (const auto& item : items) {
    ++idx;
    auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = item.fn();
    } catch (const std::exception& e) {
      note(std::string("exception: ") + e.what());
    }
    double secs = seconds_since(t0);
    if (item.limit_secs > 0 && secs > item.limit_secs) {
      note("runtime limit exceeded: " + std::to_string(secs) + "s > " +
           std::to_string(item.limit_secs) + "s");
      ok = false;
    }
    report(idx, item.name, ok, secs);
  }
  std::printf("%s\n", failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : "ACCEPTANCE FAILURES");
  return failures == 0 ? 0 : 1;
}

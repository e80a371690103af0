#include "ngring/cone_rules.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ngring {

std::string rule_kind_str(RuleKind k) {
  switch (k) {
    case RuleKind::Gorenstein:
      return "Gorenstein";
    case RuleKind::NearlyGorensteinNotGorenstein:
      return "NearlyGorensteinNotGorenstein";
    case RuleKind::NotNearlyGorenstein:
      return "NotNearlyGorenstein";
    case RuleKind::AlmostGorenstein:
      return "AlmostGorenstein";
    case RuleKind::NotAlmostGorenstein:
      return "NotAlmostGorenstein";
    case RuleKind::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

namespace {

const std::set<std::string> kKnownFlags = {
    "D~K+P", "D~K-P", "D~2K",       "D~3K",       "D~3K-P",         "D~3W",
    "D~6W",  "h0(3K-D)=0", "h0(D-K)=2", "bpf(D-K)", "O(D)-generated", "R1=K0*L1",
};

bool has_flag(const SymbolicConeInput& in, const std::string& f) { return in.flags.count(f) > 0; }

BoolOrUnknown tri_flag(const SymbolicConeInput& in, const std::string& f) {
  bool pos = has_flag(in, f), neg = has_flag(in, "not:" + f);
  if (pos) return BoolOrUnknown(true);
  if (neg) return BoolOrUnknown(false);
  return BoolOrUnknown::unknown("fact \"" + f + "\" was not declared");
}

void validate_input(const SymbolicConeInput& in) {
  if (!in.curve) throw std::invalid_argument("cone input needs a curve");
  if (in.curve->kind() != CurveKind::Generic &&
      in.curve->kind() != CurveKind::HyperellipticOnePoint)
    throw std::invalid_argument("cone classification works on generic or hyperelliptic models");
  long g = in.curve->genus();
  if (g < 2) throw std::invalid_argument("cone classification assumes genus >= 2");
  if (in.d.curve() != in.curve) throw std::invalid_argument("class on wrong curve");
  if (in.d.degree() < 1) throw std::invalid_argument("cone divisor must be ample (degree >= 1)");
  long deg = in.d.degree();
  for (const auto& f : in.flags) {
    std::string base = f.rfind("not:", 0) == 0 ? f.substr(4) : f;
    if (!kKnownFlags.count(base)) throw std::invalid_argument("unknown flag \"" + f + "\"");
    if (in.flags.count(base) && in.flags.count("not:" + base))
      throw std::invalid_argument("inconsistent flags for \"" + base + "\"");
  }
  // degree arithmetic of positive declarations, validated where checkable
  auto need_deg = [&](const char* flag, long required) {
    if (has_flag(in, flag) && deg != required)
      throw std::invalid_argument(std::string("flag ") + flag + " needs deg(D) = " +
                                  std::to_string(required) + ", got " + std::to_string(deg));
  };
  need_deg("D~K+P", 2 * g - 1);
  need_deg("D~K-P", 2 * g - 3);
  need_deg("D~2K", 2 * (2 * g - 2));
  need_deg("D~3K", 3 * (2 * g - 2));
  need_deg("D~3K-P", 3 * (2 * g - 2) - 1);
  need_deg("D~3W", 3);
  need_deg("D~6W", 6);
}

std::string bool_src(const char* what, bool value) {
  return std::string(value ? "" : "!") + what;
}

struct Matcher {
  const SymbolicConeInput& in;
  std::vector<std::string>* used;

  long g() const { return in.curve->genus(); }
  long deg() const { return in.d.degree(); }
  DivisorClass k() const { return in.curve->canonical_class(); }

  void note(const std::string& s) const { used->push_back(s); }

  // Is the class expression a single symbolic point with coefficient 1?
  static bool is_single_point(const DivisorClass& e) {
    return e.kc_multiple() == 0 && e.point_part().size() == 1 &&
           e.point_part().begin()->second == 1;
  }

  static bool all_points_generic(const CurvePtr& curve, const DivisorClass& e) {
    for (const auto& [i, c] : e.point_part()) {
      const PointInfo& p = curve->point(i);
      if (!p.generic || p.weierstrass) return false;
    }
    return true;
  }

  // D ~ E + P for some point P, where deg(D - E) = 1.
  BoolOrUnknown plus_some_point(const DivisorClass& e, const std::string& flag) const {
    if (!flag.empty()) {
      BoolOrUnknown f = tri_flag(in, flag);
      if (f.known()) {
        note("flag:" + std::string(*f ? "" : "not:") + flag);
        return f;
      }
    }
    DivisorClass diff = in.d - e;
    if (diff.degree() != 1) return BoolOrUnknown(false);
    if (in.curve->kind() == CurveKind::HyperellipticOnePoint) {
      note("class:" + in.d.describe() + " on the one-point model");
      return BoolOrUnknown(true);  // diff = 1*P literally
    }
    if (is_single_point(diff)) {
      note("class:D-(" + e.describe() + ")=" + diff.describe());
      return BoolOrUnknown(true);
    }
    if (all_points_generic(in.curve, diff)) {
      // points in general position: a degree-1 class that is not literally a
      // point is not effective
      note("class:D-(" + e.describe() + ") is no single point (generic position)");
      return BoolOrUnknown(false);
    }
    return BoolOrUnknown::unknown("whether D ~ " + e.describe() + " + P for some point");
  }

  BoolOrUnknown equiv(const DivisorClass& e, const std::string& flag) const {
    if (!flag.empty()) {
      BoolOrUnknown f = tri_flag(in, flag);
      if (f.known()) {
        note("flag:" + std::string(*f ? "" : "not:") + flag);
        return f;
      }
    }
    BoolOrUnknown r = classes_equivalent(in.d, e);
    if (r.known()) note("class:D" + std::string(*r ? "~" : "!~") + e.describe());
    return r;
  }

  // D ~ mult * W for a hyperelliptic Weierstrass point W.
  BoolOrUnknown hyper_multiple(long mult, const std::string& flag) const {
    BoolOrUnknown hyp = in.curve->hyperelliptic();
    if (hyp.known() && !*hyp) {
      note("!hyperelliptic");
      return BoolOrUnknown(false);
    }
    if (!flag.empty()) {
      BoolOrUnknown f = tri_flag(in, flag);
      if (f.known()) {
        note("flag:" + std::string(*f ? "" : "not:") + flag);
        return f;
      }
    }
    if (!hyp.known()) return BoolOrUnknown::unknown("whether the curve is hyperelliptic");
    note("hyperelliptic");
    if (in.curve->kind() == CurveKind::HyperellipticOnePoint)
      return BoolOrUnknown(deg() == mult);
    // generic model: compare against mult*W for a Weierstrass point
    for (int i = 0; i < in.curve->point_count(); ++i) {
      if (!in.curve->point(i).weierstrass) continue;
      BoolOrUnknown r =
          classes_equivalent(in.d, in.curve->divisor_class(0, {{i, mult}}));
      if (r.known() && *r) {
        note("class:D~" + std::to_string(mult) + in.curve->point(i).label);
        return BoolOrUnknown(true);
      }
    }
    if (all_points_generic(in.curve, in.d)) {
      note("class:D supported on generic points");
      return BoolOrUnknown(false);
    }
    return BoolOrUnknown::unknown("whether D ~ " + std::to_string(mult) +
                                  "P for a hyperelliptic point");
  }

  NatOrUnknown h0_of(const DivisorClass& e) const { return h0(in.curve, e); }
};

RuleVerdict verdict(RuleKind kind, std::string rule_id, std::vector<std::string> used,
                    std::string detail = "") {
  return RuleVerdict{kind, std::move(rule_id), std::move(used), std::move(detail)};
}

RuleVerdict unknown_verdict(std::string rule_id, std::vector<std::string> used,
                            std::string missing) {
  return RuleVerdict{RuleKind::Unknown, std::move(rule_id), std::move(used), std::move(missing)};
}

RuleVerdict classify_hyperelliptic_point(const SymbolicConeInput& in,
                                         std::vector<std::string> used) {
  long g = in.curve->genus();
  long d = in.d.degree();
  used.push_back("hyperelliptic one-point model");
  used.push_back("d=" + std::to_string(d));
  auto ng = [&](const char* id) {
    return verdict(RuleKind::NearlyGorensteinNotGorenstein, id, used);
  };
  auto not_ng = [&](const char* id) { return verdict(RuleKind::NotNearlyGorenstein, id, used); };
  if (d == 3 || d == 4) return ng("hypell:d=3,4");
  if (d == 6) {
    used.push_back("g mod 3 = " + std::to_string(g % 3));
    return g % 3 == 2 ? not_ng("hypell:d=6") : ng("hypell:d=6");
  }
  if (d >= 4 * g - 1) return ng("hypell:high-degree");
  if (d == 2 * g - 3) return ng("hypell:deg=2g-3");
  if (d == 2 * g - 1) return ng("hypell:deg=2g-1");
  switch (g) {
    case 2:
      return not_ng("hypell:g2-gap");  // d = 5
    case 3:
      if (d == 5) return ng("hypell:g3-list");
      return not_ng("hypell:g3-gap");  // 7..10
    case 4:
      if (d == 5 || d == 7 || d == 8) return ng("hypell:g4-list");
      return not_ng("hypell:g4-gap");  // 9..14
    case 5:
      if (d <= 10) return ng("hypell:g5-list");  // 5, 7, 9, 10 (6 and 8 caught earlier)
      return not_ng("hypell:g5-gap");            // 11..18
    default:
      return unknown_verdict("hypell:mid-range", used,
                             "Veronese verdicts for genus " + std::to_string(g) +
                                 " in 5 <= d < 4g-1 are not classified");
  }
}

RuleVerdict classify_g2(const Matcher& m, std::vector<std::string> used) {
  long d = m.deg();
  if (d <= 2) return verdict(RuleKind::NotNearlyGorenstein, "g2:deg<=2", used);
  if (d == 3) {
    BoolOrUnknown e = m.plus_some_point(m.k(), "D~K+P");
    if (!e.known()) return unknown_verdict("g2:deg3", used, e.reason());
    return verdict(*e ? RuleKind::NearlyGorensteinNotGorenstein : RuleKind::NotNearlyGorenstein,
                   "g2:deg3:K+P", used);
  }
  if (d == 4) {
    BoolOrUnknown e = m.equiv(m.k().scaled(2), "D~2K");
    if (!e.known()) return unknown_verdict("g2:deg4", used, e.reason());
    return verdict(*e ? RuleKind::NearlyGorensteinNotGorenstein : RuleKind::NotNearlyGorenstein,
                   "g2:deg4:2K", used);
  }
  if (d == 5) {
    DivisorClass e = m.k().scaled(3) - m.in.d;
    NatOrUnknown h = m.h0_of(e);
    if (h.known()) {
      m.note("computed:h0(3K-D)=" + std::to_string(*h));
      return verdict(*h == 0 ? RuleKind::NearlyGorensteinNotGorenstein
                             : RuleKind::NotNearlyGorenstein,
                     "g2:deg5:h0(3K-D)", used);
    }
    BoolOrUnknown f = tri_flag(m.in, "h0(3K-D)=0");
    if (f.known()) {
      used.push_back("flag:" + std::string(*f ? "" : "not:") + "h0(3K-D)=0");
      return verdict(*f ? RuleKind::NearlyGorensteinNotGorenstein
                        : RuleKind::NotNearlyGorenstein,
                     "g2:deg5:h0(3K-D)", used);
    }
    return unknown_verdict("g2:deg5", used, "whether h0(3K-D) = 0");
  }
  if (d == 6) {
    BoolOrUnknown e = m.equiv(m.k().scaled(3), "D~3K");
    if (!e.known()) return unknown_verdict("g2:deg6", used, e.reason());
    return verdict(*e ? RuleKind::NotNearlyGorenstein : RuleKind::NearlyGorensteinNotGorenstein,
                   "g2:deg6:3K", used);
  }
  return verdict(RuleKind::NearlyGorensteinNotGorenstein, "g2:high-degree", used);
}

RuleVerdict classify_g3(const Matcher& m, std::vector<std::string> used) {
  long d = m.deg();
  const SymbolicConeInput& in = m.in;
  if (d <= 2) return verdict(RuleKind::NotNearlyGorenstein, "g3:deg<=2", used);
  if (d == 3) {
    BoolOrUnknown e = m.hyper_multiple(3, "D~3W");
    if (!e.known()) return unknown_verdict("g3:deg3", used, e.reason());
    return verdict(*e ? RuleKind::NearlyGorensteinNotGorenstein : RuleKind::NotNearlyGorenstein,
                   "g3:deg3:hyperelliptic-3P", used);
  }
  if (d == 4) return verdict(RuleKind::NotNearlyGorenstein, "g3:deg4", used);
  if (d == 5) {
    BoolOrUnknown e = m.plus_some_point(m.k(), "D~K+P");
    if (!e.known()) return unknown_verdict("g3:deg5", used, e.reason());
    return verdict(*e ? RuleKind::NearlyGorensteinNotGorenstein : RuleKind::NotNearlyGorenstein,
                   "g3:deg5:K+P", used);
  }
  if (d == 6) {
    BoolOrUnknown e = m.hyper_multiple(6, "D~6W");
    if (!e.known()) return unknown_verdict("g3:deg6", used, e.reason());
    return verdict(*e ? RuleKind::NearlyGorensteinNotGorenstein : RuleKind::NotNearlyGorenstein,
                   "g3:deg6:hyperelliptic-6P", used);
  }
  if (d == 7) {
    // D = K + B with h0(B) = 2 and O(B) base-point free
    DivisorClass b = in.d - m.k();
    NatOrUnknown h = m.h0_of(b);
    BoolOrUnknown h_is_2 = BoolOrUnknown::unknown("");
    if (h.known()) {
      m.note("computed:h0(D-K)=" + std::to_string(*h));
      h_is_2 = BoolOrUnknown(*h == 2);
    } else {
      h_is_2 = tri_flag(in, "h0(D-K)=2");
      if (h_is_2.known()) m.note("flag:h0(D-K)=2");
    }
    if (!h_is_2.known()) return unknown_verdict("g3:deg7", used, "whether h0(D-K) = 2");
    if (!*h_is_2) return verdict(RuleKind::NotNearlyGorenstein, "g3:deg7:K+B", used);
    BoolOrUnknown bpf = BoolOrUnknown::unknown("");
    if (in.curve->kind() == CurveKind::HyperellipticOnePoint) {
      // base point at P exactly when dropping P keeps every section
      NatOrUnknown full = m.h0_of(b);
      NatOrUnknown less = m.h0_of(b - in.curve->divisor_class(0, {{0, 1}}));
      bpf = BoolOrUnknown(*less < *full);
      m.note("computed:bpf(D-K)=" + std::string(*bpf ? "true" : "false"));
    } else {
      bpf = tri_flag(in, "bpf(D-K)");
      if (bpf.known()) m.note("flag:bpf(D-K)");
    }
    if (!bpf.known()) return unknown_verdict("g3:deg7", used, "whether O(D-K) is base-point free");
    return verdict(*bpf ? RuleKind::NearlyGorensteinNotGorenstein
                        : RuleKind::NotNearlyGorenstein,
                   "g3:deg7:K+B", used);
  }
  if (d == 8) {
    BoolOrUnknown e = m.equiv(m.k().scaled(2), "D~2K");
    if (!e.known()) return unknown_verdict("g3:deg8", used, e.reason());
    if (!*e) return verdict(RuleKind::NotNearlyGorenstein, "g3:deg8:2K", used);
    BoolOrUnknown hyp = in.curve->hyperelliptic();
    if (!hyp.known()) return unknown_verdict("g3:deg8", used, "whether the curve is hyperelliptic");
    used.push_back(bool_src("hyperelliptic", *hyp));
    return verdict(*hyp ? RuleKind::NotNearlyGorenstein : RuleKind::NearlyGorensteinNotGorenstein,
                   "g3:deg8:2K", used);
  }
  if (d >= 9 && d <= 11) {
    BoolOrUnknown two_k_p = m.plus_some_point(m.k().scaled(2), "");
    if (two_k_p.known() && *two_k_p)
      return verdict(RuleKind::NotNearlyGorenstein, "g3:deg9:2K+P", used,
                     "K_0 L_1 lands in H^0(2K), a proper subspace of R_1");
    BoolOrUnknown f = tri_flag(in, "R1=K0*L1");
    if (f.known()) {
      used.push_back("flag:" + std::string(*f ? "" : "not:") + "R1=K0*L1");
      return verdict(*f ? RuleKind::NearlyGorensteinNotGorenstein
                        : RuleKind::NotNearlyGorenstein,
                     "g3:deg9-11:R1-surjectivity", used);
    }
    return unknown_verdict("g3:deg9-11", used,
                           "whether R_1 = K_0 * L_1 (no closed classification is available)");
  }
  return verdict(RuleKind::NearlyGorensteinNotGorenstein, "g3:high-degree", used);
}

}  // namespace

SymbolicConeInput make_cone_input(CurvePtr curve, DivisorClass d, std::set<std::string> flags) {
  SymbolicConeInput in{std::move(curve), std::move(d), std::move(flags)};
  validate_input(in);
  return in;
}

RuleVerdict classify_cone(const SymbolicConeInput& in) {
  validate_input(in);
  long g = in.curve->genus();
  long d = in.d.degree();
  std::vector<std::string> used{"genus=" + std::to_string(g), "deg(D)=" + std::to_string(d)};
  Matcher m{in, &used};

  // Gorenstein first, so the "not Gorenstein" hypotheses of the tables hold.
  if ((2 * g - 2) % d == 0) {
    long t = (2 * g - 2) / d;
    BoolOrUnknown e = classes_equivalent(m.k(), in.d.scaled(t));
    if (!e.known())
      return unknown_verdict("gorenstein:canonical-multiple", used,
                             "whether K ~ " + std::to_string(t) + "D");
    if (*e) {
      used.push_back("class:K~" + std::to_string(t) + "D");
      return verdict(RuleKind::Gorenstein, "gorenstein:canonical-multiple", used);
    }
    used.push_back("class:K!~" + std::to_string(t) + "D");
    NatOrUnknown h = m.h0_of(in.d);
    if (h.known() && *h > 0) {
      used.push_back("computed:h0(D)=" + std::to_string(*h));
      return verdict(RuleKind::NotNearlyGorenstein, "degree-divides", used,
                     "deg(D) | 2g-2 with h0(D) != 0: Gorenstein or not nearly Gorenstein");
    }
  }

  if (in.curve->kind() == CurveKind::HyperellipticOnePoint)
    return classify_hyperelliptic_point(in, used);

  if (g == 2) return classify_g2(m, used);
  if (g == 3) return classify_g3(m, used);

  // general-genus rules
  if (d > 6 * g - 6) return verdict(RuleKind::NearlyGorensteinNotGorenstein, "general:deg>6g-6", used);
  if (d == 6 * g - 6)
    return verdict(RuleKind::NearlyGorensteinNotGorenstein, "general:deg=6g-6", used);
  if (d == g - 1) return verdict(RuleKind::NotNearlyGorenstein, "general:deg=g-1", used);
  if (d == 2 * g - 3) {
    BoolOrUnknown e = m.hyper_multiple(2 * g - 3, "D~K-P");
    if (!e.known()) return unknown_verdict("general:deg=2g-3", used, e.reason());
    return verdict(*e ? RuleKind::NearlyGorensteinNotGorenstein : RuleKind::NotNearlyGorenstein,
                   "general:deg=2g-3", used);
  }
  if (d == 2 * g - 1) {
    BoolOrUnknown e = m.plus_some_point(m.k(), "D~K+P");
    if (!e.known()) return unknown_verdict("general:deg=2g-1", used, e.reason());
    return verdict(*e ? RuleKind::NearlyGorensteinNotGorenstein : RuleKind::NotNearlyGorenstein,
                   "general:deg=2g-1", used);
  }
  // Veronese of the standard-graded canonical ring
  if (in.d.point_part().empty() && in.d.kc_multiple() >= 2) {
    BoolOrUnknown hyp = in.curve->hyperelliptic();
    if (hyp.known() && !*hyp) {
      used.push_back("!hyperelliptic");
      used.push_back("class:D=" + std::to_string(in.d.kc_multiple()) + "K");
      return verdict(RuleKind::NearlyGorensteinNotGorenstein, "veronese-of-standard", used);
    }
  }
  if (d >= 2 * g + 1) {
    BoolOrUnknown f = tri_flag(in, "R1=K0*L1");
    if (f.known()) {
      used.push_back("flag:" + std::string(*f ? "" : "not:") + "R1=K0*L1");
      return verdict(*f ? RuleKind::NearlyGorensteinNotGorenstein
                        : RuleKind::NotNearlyGorenstein,
                     "general:R1-surjectivity", used);
    }
  }
  return unknown_verdict("general:no-rule", used,
                         "no classification rule applies; supply R1=K0*L1 or equivalence facts");
}

RuleVerdict almost_gorenstein_g2(const SymbolicConeInput& in) {
  validate_input(in);
  if (in.curve->genus() != 2)
    throw std::invalid_argument("almost-Gorenstein table is stated for genus 2");
  long d = in.d.degree();
  std::vector<std::string> used{"genus=2", "deg(D)=" + std::to_string(d)};
  Matcher m{in, &used};
  if (d <= 2) return verdict(RuleKind::AlmostGorenstein, "ag:g2:deg<=2", used);
  if (d == 3) {
    BoolOrUnknown generated = tri_flag(in, "O(D)-generated");
    if (generated.known()) {
      used.push_back("flag:" + std::string(*generated ? "" : "not:") + "O(D)-generated");
    } else {
      // at degree 3 on genus 2, O(D) has a base point exactly when D ~ K + P
      BoolOrUnknown e = m.plus_some_point(m.k(), "D~K+P");
      if (!e.known())
        return unknown_verdict("ag:g2:deg3", used, "whether O(D) is generated by global sections");
      generated = BoolOrUnknown(!*e);
      used.push_back("derived:O(D)-generated=" + std::string(*generated ? "true" : "false"));
    }
    return verdict(*generated ? RuleKind::NotAlmostGorenstein : RuleKind::AlmostGorenstein,
                   "ag:g2:deg3:generation", used);
  }
  BoolOrUnknown e = m.equiv(m.k().scaled(2), "D~2K");
  if (!e.known()) return unknown_verdict("ag:g2:deg>=4", used, e.reason());
  return verdict(*e ? RuleKind::AlmostGorenstein : RuleKind::NotAlmostGorenstein,
                 "ag:g2:deg>=4:2K", used);
}

ComparisonReport compare_ng_ag_g2(const SymbolicConeInput& in) {
  validate_input(in);
  if (in.curve->genus() != 2)
    throw std::invalid_argument("the comparison is stated for genus 2");
  ComparisonReport rep;
  rep.ng = classify_cone(in);
  rep.ag = almost_gorenstein_g2(in);
  if (rep.ng.kind == RuleKind::Gorenstein) {
    rep.category = "gorenstein";
    return rep;
  }
  if (rep.ng.kind == RuleKind::Unknown || rep.ag.kind == RuleKind::Unknown) {
    rep.category = "unknown";
    return rep;
  }
  bool ng = rep.ng.kind == RuleKind::NearlyGorensteinNotGorenstein;
  bool ag = rep.ag.kind == RuleKind::AlmostGorenstein;
  rep.category = ng ? (ag ? "ng-and-ag" : "ng-only") : (ag ? "ag-only" : "neither");

  long d = in.d.degree();
  std::vector<std::string> scratch;
  Matcher m{in, &scratch};
  auto is_true = [](const BoolOrUnknown& b) { return b.known() && *b; };
  if (rep.category == "ng-and-ag") {
    if (d == 3 && is_true(m.plus_some_point(m.k(), "D~K+P")))
      rep.case_id = "both:deg3-K+P";
    else if (is_true(m.equiv(m.k().scaled(2), "D~2K")))
      rep.case_id = "both:2K";
  } else if (rep.category == "neither") {
    if (d == 3) {
      rep.case_id = "neither:deg3-generated";
    } else if (d == 5) {
      DivisorClass diff = m.k().scaled(3) - in.d;
      if (Matcher::is_single_point(diff) || has_flag(in, "D~3K-P"))
        rep.case_id = "neither:deg5-3K-P";
    } else if (d == 6 && is_true(m.equiv(m.k().scaled(3), "D~3K"))) {
      rep.case_id = "neither:deg6-3K";
    }
  }
  return rep;
}

}  // namespace ngring

#include "ngring/demazure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ngring {

std::string sing_type_str(SingType t) {
  switch (t) {
    case SingType::Rational:
      return "Rational";
    case SingType::Elliptic:
      return "Elliptic";
    case SingType::Other:
      return "Other";
  }
  return "Other";
}

DemazurePair DemazurePair::make(QDivisor d) {
  if (!(d.degree() > 0))
    throw std::invalid_argument("Demazure pair needs deg(D) > 0, got " + rat_str(d.degree()));
  return DemazurePair(std::move(d));
}

DemazurePair DemazurePair::make_unchecked(QDivisor d) { return DemazurePair(std::move(d)); }

namespace {

constexpr const char* kNotAmple = "divisor is not ample (deg <= 0); search does not terminate";

// Q-divisor part of the class before rounding; the K-multiple is carried
// separately so the Generic model stays symbolic.
QDivisor part_qdivisor(const DemazurePair& pair, GradedPart part, long n) {
  const QDivisor& d = pair.divisor();
  switch (part) {
    case GradedPart::R:
      return d.scaled(Rat(n));
    case GradedPart::K:
      return frc(d) + d.scaled(Rat(n));
    case GradedPart::Kinv:
      return frc(d).scaled(Rat(-1)) + d.scaled(Rat(n));
  }
  throw std::logic_error("bad graded part");
}

long part_kc(GradedPart part) {
  switch (part) {
    case GradedPart::R:
      return 0;
    case GradedPart::K:
      return 1;
    case GradedPart::Kinv:
      return -1;
  }
  throw std::logic_error("bad graded part");
}

// Exact degree of the unrounded class.
Rat part_exact_degree(const DemazurePair& pair, GradedPart part, long n) {
  long g = pair.curve()->genus();
  return Rat(part_kc(part) * (2 * g - 2)) + part_qdivisor(pair, part, n).degree();
}

long support_size(const QDivisor& d) { return static_cast<long>(d.coefficients().size()); }

}  // namespace

DivisorClass part_class(const DemazurePair& pair, GradedPart part, long n) {
  return round_class(part_kc(part), part_qdivisor(pair, part, n));
}

NatOrUnknown graded_dim(const DemazurePair& pair, GradedPart part, long n) {
  return h0(pair.curve(), part_class(pair, part, n));
}

namespace {

// min n with dim(part, n) != 0, for ample pairs; the scan window is forced by
// h^0 = deg - g + 1 once the rounded degree reaches 2g - 1.
NatOrUnknown find_min_nonzero(const DemazurePair& pair, GradedPart part) {
  if (!pair.ample()) return NatOrUnknown::unknown(kNotAmple);
  Rat deg_d = pair.divisor().degree();
  long g = pair.curve()->genus();
  Rat e0 = part_exact_degree(pair, part, 0);
  long f = support_size(pair.divisor());
  long threshold = std::max(2 * g - 1, 0L);  // rounded degree, h^0 > 0 guaranteed
  long n_lo = to_long(rat_ceil(-e0 / deg_d));
  long n_hi = to_long(rat_ceil((Rat(threshold + f) - e0) / deg_d));
  for (long n = n_lo; n <= n_hi; ++n) {
    NatOrUnknown dim = graded_dim(pair, part, n);
    if (!dim.known())
      return NatOrUnknown::unknown("degree " + std::to_string(n) + ": " + dim.reason());
    if (*dim > 0) return NatOrUnknown(n);
  }
  throw std::logic_error("nonvanishing threshold missed; termination bound is wrong");
}

// min n > 0 with deg[nD] >= 0; degree-only, works for non-ample divisors via
// the quasi-period window.
std::optional<long> min_nonneg_rounded_degree(const QDivisor& d) {
  Rat deg_d = d.degree();
  long qstar = to_long(d.denominator_lcm());
  long f = support_size(d);
  long n_hi;
  if (deg_d > 0)
    n_hi = to_long(rat_ceil(Rat(f) / deg_d)) + 1;
  else if (deg_d == 0)
    n_hi = qstar;
  else
    return std::nullopt;  // deg[nD] <= n deg(D) < 0 for every n > 0
  for (long n = 1; n <= n_hi; ++n) {
    if (round_down(d.scaled(Rat(n))).degree() >= 0) return n;
  }
  return std::nullopt;
}

NatOrUnknown find_m(const DemazurePair& pair) {
  const QDivisor& d = pair.divisor();
  long qstar = to_long(d.denominator_lcm());
  long n_hi;
  if (pair.ample()) {
    long g = pair.curve()->genus();
    long f = support_size(d);
    long threshold = std::max(2 * g - 1, 0L);
    n_hi = std::max(1L, to_long(rat_ceil(Rat(threshold + f) / d.degree())));
  } else {
    n_hi = qstar;
  }
  for (long n = 1; n <= n_hi; ++n) {
    NatOrUnknown dim = graded_dim(pair, GradedPart::R, n);
    if (!dim.known())
      return NatOrUnknown::unknown("degree " + std::to_string(n) + ": " + dim.reason());
    if (*dim > 0) return NatOrUnknown(n);
  }
  if (pair.ample()) throw std::logic_error("m-search bound is wrong");
  return NatOrUnknown::unknown(kNotAmple);
}

NatOrUnknown find_pg(const DemazurePair& pair) {
  if (!pair.ample()) {
    // genus-0 non-ample pairs may still have an identically vanishing h^1
    if (pair.curve()->genus() == 0 && pair.divisor().degree() == 0) {
      long qstar = to_long(pair.divisor().denominator_lcm());
      bool all_zero = true;
      for (long n = 0; n <= qstar; ++n)
        if (round_down(pair.divisor().scaled(Rat(n))).degree() < -1) all_zero = false;
      if (all_zero) return NatOrUnknown(0);
    }
    return NatOrUnknown::unknown(kNotAmple);
  }
  long g = pair.curve()->genus();
  long f = support_size(pair.divisor());
  Rat deg_d = pair.divisor().degree();
  // h^1([nD]) = 0 once n deg(D) - f >= 2g - 1, monotonically in n
  long n_hi = to_long(rat_ceil(Rat(2 * g - 1 + f) / deg_d));
  long total = 0;
  for (long n = 0; n <= n_hi; ++n) {
    NatOrUnknown h = h1(pair.curve(), part_class(pair, GradedPart::R, n));
    if (!h.known())
      return NatOrUnknown::unknown("h1 at degree " + std::to_string(n) + ": " + h.reason());
    total += *h;
  }
  return NatOrUnknown(total);
}

}  // namespace

namespace {

// p_g = 0 is decidable on genus-0 pairs even when the divisor is not ample:
// h^1([nD]) = max(0, -deg[nD] - 1) and the degree sequence is quasi-periodic.
bool rational_p1(const QDivisor& d) {
  Rat deg_d = d.degree();
  long qstar = to_long(d.denominator_lcm());
  long n_hi;
  if (deg_d > 0) {
    long f = support_size(d);
    n_hi = to_long(rat_ceil(Rat(f - 1) / deg_d)) + 1;
  } else if (deg_d == 0) {
    n_hi = qstar;
  } else {
    return false;  // deg[nD] <= n deg(D) drops below -1 eventually
  }
  for (long n = 0; n <= n_hi; ++n)
    if (round_down(d.scaled(Rat(n))).degree() < -1) return false;
  return true;
}

}  // namespace

OrUnknown<SingType> singularity_type(const DemazurePair& pair) {
  using Out = OrUnknown<SingType>;
  long g = pair.curve()->genus();
  const QDivisor& d = pair.divisor();

  if (g == 0 && rational_p1(d)) return Out(SingType::Rational);
  // genus >= 1: p_g >= h^1(O) = g >= 1, never rational

  if (g == 1) {
    Int deg1 = round_down(d).degree();
    return Out(deg1 >= 0 ? SingType::Elliptic : SingType::Other);
  }
  if (g == 0) {
    std::optional<long> m = min_nonneg_rounded_degree(d);
    if (!m) return Out(SingType::Other);
    long m1_count = 0;
    bool pattern = true;
    for (long i = 1; i < *m; ++i) {
      Int deg = round_down(d.scaled(Rat(i))).degree();
      if (deg == -2)
        ++m1_count;
      else if (deg != -1)
        pattern = false;
    }
    return Out(pattern && m1_count == 1 ? SingType::Elliptic : SingType::Other);
  }
  return Out(SingType::Other);
}

GradedRingProfile invariants(const DemazurePair& pair) {
  GradedRingProfile p;
  p.m = find_m(pair);
  NatOrUnknown min_k = find_min_nonzero(pair, GradedPart::K);
  p.a = min_k.map([](long n) { return -n; });
  p.b = find_min_nonzero(pair, GradedPart::Kinv);
  p.pg = find_pg(pair);
  p.sing_type = singularity_type(pair);
  return p;
}

BoolOrUnknown gorenstein_test(const DemazurePair& pair) {
  if (!pair.ample()) return BoolOrUnknown::unknown(kNotAmple);
  const QDivisor& d = pair.divisor();
  long g = pair.curve()->genus();
  QDivisor fr = frc(d);
  Rat deg_kf = Rat(2 * g - 2) + fr.degree();
  Rat t_rat = deg_kf / d.degree();
  if (!is_integral(t_rat)) return BoolOrUnknown(false);
  long t = rat_to_long(t_rat);
  QDivisor diff = fr - d.scaled(Rat(t));
  if (!diff.is_integral()) return BoolOrUnknown(false);
  std::map<int, long> pts;
  for (const auto& [i, c] : diff.coefficients()) pts[i] = rat_to_long(c);
  DivisorClass e(pair.curve(), 1, std::move(pts));
  return class_is_principal(pair.curve(), e);
}

NecessaryNG necessary_ng(const DemazurePair& pair) {
  NecessaryNG out;
  BoolOrUnknown free = gorenstein_test(pair);
  if (!free.known()) {
    out.result = NecessaryNG::Result::Unknown;
    out.reason = free.reason();
    return out;
  }
  if (*free) {
    out.result = NecessaryNG::Result::Pass;
    out.reason = "K_R is free (Gorenstein), hence nearly Gorenstein";
    return out;
  }
  GradedRingProfile p = invariants(pair);
  if (!p.a.known() || !p.b.known() || !p.m.known()) {
    out.result = NecessaryNG::Result::Unknown;
    out.reason = !p.a.known() ? p.a.reason() : (!p.b.known() ? p.b.reason() : p.m.reason());
    return out;
  }
  long a = *p.a, b = *p.b, m = *p.m;
  if (-a + b != m) {
    out.result = NecessaryNG::Result::Fail;
    std::ostringstream os;
    os << "-a + b = " << -a + b << " differs from m = " << m;
    out.reason = os.str();
    return out;
  }
  // degree obstruction: deg(K + Frc(D)) = r deg(D) for a positive integer r
  Rat ratio = (Rat(2 * pair.curve()->genus() - 2) + frc(pair.divisor()).degree()) /
              pair.divisor().degree();
  if (is_integral(ratio) && num(ratio) > 0) {
    NatOrUnknown dim_r1 = graded_dim(pair, GradedPart::R, 1);
    if (!dim_r1.known()) {
      out.result = NecessaryNG::Result::Unknown;
      out.reason = dim_r1.reason();
      return out;
    }
    if (*dim_r1 > 0) {
      out.result = NecessaryNG::Result::Fail;
      out.reason = "deg(K + Frc(D)) = " + rat_str(ratio) +
                   " * deg(D) with K_R not free and R_1 != 0";
      return out;
    }
  }
  NatOrUnknown dim_k = graded_dim(pair, GradedPart::K, -a);
  NatOrUnknown dim_l = graded_dim(pair, GradedPart::Kinv, b);
  NatOrUnknown dim_m = graded_dim(pair, GradedPart::R, m);
  if (!dim_k.known() || !dim_l.known() || !dim_m.known()) {
    out.result = NecessaryNG::Result::Unknown;
    out.reason = !dim_k.known() ? dim_k.reason() : (!dim_l.known() ? dim_l.reason() : dim_m.reason());
    return out;
  }
  if (*dim_k == 1 && *dim_l != *dim_m) {
    out.result = NecessaryNG::Result::Fail;
    std::ostringstream os;
    os << "dim K_{-a} = 1 forces dim Kinv_b = dim R_m, but " << *dim_l << " != " << *dim_m;
    out.reason = os.str();
    return out;
  }
  out.result = NecessaryNG::Result::Pass;
  out.reason = "all necessary conditions hold";
  return out;
}

// ----- function spaces on the projective line --------------------------------

namespace {

void require_p1(const DemazurePair& pair, const char* what) {
  if (pair.curve()->kind() != CurveKind::ProjectiveLine)
    throw std::invalid_argument(std::string(what) +
                                " is only available over the projective line");
}

}  // namespace

FunctionSpace section_space(const DemazurePair& pair, GradedPart part, long n) {
  require_p1(pair, "section_space");
  const CurvePtr& curve = pair.curve();
  // fold the concrete canonical divisor -2 P_inf into the Q-divisor
  QDivisor q = part_qdivisor(pair, part, n);
  long kc = part_kc(part);
  if (kc != 0) {
    std::map<int, Rat> kdiv{{curve->infinity_index(), Rat(-2 * kc)}};
    q = q + QDivisor(curve, std::move(kdiv));
  }
  FunctionSpace fs(round_down(q));
  fs.part = part;
  fs.n = n;

  Poly den = Poly::constant(Rat(1));
  Poly zreq = Poly::constant(Rat(1));
  long e_inf = 0;
  for (const auto& [i, c] : fs.divisor.coefficients()) {
    if (i == curve->infinity_index()) {
      e_inf = to_long(c);
      continue;
    }
    const Rat& coord = *curve->point(i).coord;
    long e = to_long(c);
    if (e > 0)
      den = den * Poly::linear_root(coord).pow(e);
    else
      zreq = zreq * Poly::linear_root(coord).pow(-e);
  }
  fs.denominator = den;
  fs.required_zeros = zreq;
  fs.numerator_degree_bound = den.degree() + e_inf;
  for (long k = 0; k + zreq.degree() <= fs.numerator_degree_bound; ++k)
    fs.basis_numerators.push_back(zreq * Poly::monomial(k));
  return fs;
}

DemazurePair veronese(const DemazurePair& pair, long d) {
  if (d < 1) throw std::invalid_argument("veronese index must be positive");
  return DemazurePair::make_unchecked(pair.divisor().scaled(Rat(d)));
}

// ----- trace-ideal decision ---------------------------------------------------

namespace {

class SpaceCache {
 public:
  explicit SpaceCache(const DemazurePair& pair) : pair_(pair) {}
  const FunctionSpace& get(GradedPart part, long n) {
    auto key = std::make_pair(static_cast<int>(part), n);
    auto it = cache_.find(key);
    if (it == cache_.end())
      it = cache_.emplace(key, section_space(pair_, part, n)).first;
    return it->second;
  }

 private:
  const DemazurePair& pair_;
  std::map<std::pair<int, long>, FunctionSpace> cache_;
};

// span += products A*B written in the coordinates of `target`; stops once the
// span reaches target_dim
void insert_products(const FunctionSpace& a, const FunctionSpace& b, const FunctionSpace& target,
                     RowSpan& span, long target_dim) {
  if (a.dim() == 0 || b.dim() == 0) return;
  Poly den_ab = a.denominator * b.denominator;
  for (const Poly& pa : a.basis_numerators) {
    for (const Poly& pb : b.basis_numerators) {
      if (span.dim() >= target_dim) return;
      Poly v = (pa * pb * target.denominator).div_exact(den_ab);
      span.insert(sparse_from_dense(v.coeffs()));
    }
  }
}

}  // namespace

NGVerdict ng_decide(const DemazurePair& pair, long cap) {
  require_p1(pair, "ng_decide");
  NGVerdict verdict;
  if (!pair.ample()) {
    verdict.kind = NGKind::Unknown;
    verdict.evidence.push_back({"ample-check", kNotAmple});
    return verdict;
  }

  BoolOrUnknown gor = gorenstein_test(pair);
  if (!gor.known()) {
    verdict.kind = NGKind::Unknown;
    verdict.evidence.push_back({"gorenstein:canonical-multiple", gor.reason()});
    return verdict;
  }
  if (*gor) {
    verdict.kind = NGKind::Gorenstein;
    Rat t = (Rat(-2) + frc(pair.divisor()).degree()) / pair.divisor().degree();
    verdict.evidence.push_back({"gorenstein:canonical-multiple",
                                "K + Frc(D) - aD is integral and principal with a = " + rat_str(t)});
    return verdict;
  }
  verdict.evidence.push_back(
      {"gorenstein:canonical-multiple", "K + Frc(D) is not a multiple of D: not Gorenstein"});

  GradedRingProfile prof = invariants(pair);
  long a = *prof.a, b = *prof.b, m = *prof.m;
  {
    std::ostringstream os;
    os << "a = " << a << ", b = " << b << ", m = " << m;
    verdict.evidence.push_back({"profile", os.str()});
  }

  long qstar = to_long(pair.divisor().denominator_lcm());
  if (cap <= 0) cap = 8 * qstar + 40;

  SpaceCache spaces(pair);
  long clean_streak = 0;
  bool seen_generator = false;
  std::vector<long> generator_degrees;

  for (long n = 1; n <= cap; ++n) {
    const FunctionSpace& target = spaces.get(GradedPart::R, n);
    long dim_rn = target.dim();
    if (dim_rn == 0) {
      ++clean_streak;
      if (seen_generator && clean_streak >= qstar) break;
      continue;
    }

    RowSpan decomp;
    for (long i = 1; i < n && decomp.dim() < dim_rn; ++i) {
      insert_products(spaces.get(GradedPart::R, i), spaces.get(GradedPart::R, n - i), target,
                      decomp, dim_rn);
    }
    bool decomposable = decomp.dim() == dim_rn;
    if (decomposable) {
      ++clean_streak;
      if (seen_generator && clean_streak >= qstar) break;
      continue;
    }

    // new generators in degree n: the trace part must cover them
    seen_generator = true;
    clean_streak = 0;
    generator_degrees.push_back(n);
    RowSpan trace = decomp;
    for (long j = -a; j <= n - b && trace.dim() < dim_rn; ++j) {
      insert_products(spaces.get(GradedPart::K, j), spaces.get(GradedPart::Kinv, n - j), target,
                      trace, dim_rn);
    }
    if (trace.dim() < dim_rn) {
      verdict.kind = NGKind::NotNearlyGorenstein;
      verdict.witness_degree = n;
      std::ostringstream os;
      os << "dim R_" << n << " = " << dim_rn << " but Tr_" << n << " + Decomp_" << n
         << " has dim " << trace.dim();
      verdict.evidence.push_back({"trace:degree-gap", os.str()});
      return verdict;
    }
  }

  if (seen_generator && clean_streak >= qstar) {
    verdict.kind = NGKind::NearlyGorensteinNotGorenstein;
    std::ostringstream gens;
    gens << "generator degrees";
    for (long g : generator_degrees) gens << " " << g;
    gens << " all covered by trace products; decomposables fill R_n over a full quasi-period q* = "
         << qstar;
    verdict.evidence.push_back({"trace:saturated", gens.str()});
    return verdict;
  }

  verdict.kind = NGKind::Unknown;
  verdict.evidence.push_back(
      {"trace:cap-exhausted", "degree cap " + std::to_string(cap) + " hit before saturation"});
  return verdict;
}

NGVerdict decide(const DemazurePair& pair, long cap) {
  if (pair.curve()->kind() == CurveKind::ProjectiveLine) return ng_decide(pair, cap);
  NGVerdict verdict;
  BoolOrUnknown gor = gorenstein_test(pair);
  if (gor.known() && *gor) {
    verdict.kind = NGKind::Gorenstein;
    verdict.evidence.push_back(
        {"gorenstein:canonical-multiple", "K + Frc(D) is a principal shift of a multiple of D"});
    return verdict;
  }
  NecessaryNG nec = necessary_ng(pair);
  switch (nec.result) {
    case NecessaryNG::Result::Fail:
      verdict.kind = NGKind::NotNearlyGorenstein;
      verdict.evidence.push_back({"necessary-condition", nec.reason});
      return verdict;
    case NecessaryNG::Result::Pass:
      verdict.kind = NGKind::Unknown;
      verdict.evidence.push_back(
          {"necessary-condition",
           "all necessary conditions pass; the trace computation needs an explicit P1 model"});
      return verdict;
    case NecessaryNG::Result::Unknown:
      verdict.kind = NGKind::Unknown;
      verdict.evidence.push_back({"necessary-condition", nec.reason});
      return verdict;
  }
  return verdict;
}

}  // namespace ngring

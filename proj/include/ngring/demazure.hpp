#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ngring/divisors.hpp"
#include "ngring/linalg.hpp"
#include "ngring/poly.hpp"
#include "ngring/unknown.hpp"
#include "ngring/verdict.hpp"

namespace ngring {

// The pair (C, D) presenting R = sum_n H^0(C, O([nD])) T^n.
class DemazurePair {
 public:
  // Validates ampleness (deg D > 0).
  static DemazurePair make(QDivisor d);
  // Skips the ampleness check; operations that need termination bounds
  // return Unknown on such pairs.
  static DemazurePair make_unchecked(QDivisor d);

  const CurvePtr& curve() const { return divisor_.curve(); }
  const QDivisor& divisor() const { return divisor_; }
  bool ample() const { return divisor_.degree() > 0; }

 private:
  explicit DemazurePair(QDivisor d) : divisor_(std::move(d)) {}
  QDivisor divisor_;
};

enum class GradedPart { R, K, Kinv };

enum class SingType { Rational, Elliptic, Other };
std::string sing_type_str(SingType t);

struct GradedRingProfile {
  NatOrUnknown a = NatOrUnknown::unknown("not computed");
  NatOrUnknown b = NatOrUnknown::unknown("not computed");
  NatOrUnknown m = NatOrUnknown::unknown("not computed");
  NatOrUnknown pg = NatOrUnknown::unknown("not computed");
  OrUnknown<SingType> sing_type = OrUnknown<SingType>::unknown("not computed");
};

// The divisor class whose sections give the degree-n piece of the part.
DivisorClass part_class(const DemazurePair& pair, GradedPart part, long n);

NatOrUnknown graded_dim(const DemazurePair& pair, GradedPart part, long n);

GradedRingProfile invariants(const DemazurePair& pair);

OrUnknown<SingType> singularity_type(const DemazurePair& pair);

// K_R is a free module iff K_C + Frc(D) - aD is integral and principal for
// the unique degree-compatible candidate a.
BoolOrUnknown gorenstein_test(const DemazurePair& pair);

struct NecessaryNG {
  enum class Result { Pass, Fail, Unknown };
  Result result = Result::Unknown;
  std::string reason;
};
NecessaryNG necessary_ng(const DemazurePair& pair);

// Explicit rational-function model of a graded piece on the projective line:
// sections are numerator/denominator(x) with denominator determined by the
// positive part of the class divisor.
struct FunctionSpace {
  explicit FunctionSpace(IntegralDivisor div) : divisor(std::move(div)) {}

  GradedPart part = GradedPart::R;
  long n = 0;
  IntegralDivisor divisor;       // the rounded class divisor [..]
  Poly denominator;              // product over positive finite coefficients
  Poly required_zeros;           // product over negative finite coefficients
  long numerator_degree_bound = -1;
  std::vector<Poly> basis_numerators;  // basis f*denominator, as polynomials

  long dim() const { return static_cast<long>(basis_numerators.size()); }
};

FunctionSpace section_space(const DemazurePair& pair, GradedPart part, long n);

// Full trace-ideal decision over the projective line.  cap <= 0 selects the
// default bound 8*qstar + 40 where qstar = lcm of coefficient denominators.
NGVerdict ng_decide(const DemazurePair& pair, long cap = 0);

// Composite decision for any curve model: trace computation over P1,
// Gorenstein shortcut plus necessary conditions elsewhere.
NGVerdict decide(const DemazurePair& pair, long cap = 0);

DemazurePair veronese(const DemazurePair& pair, long d);

}  // namespace ngring

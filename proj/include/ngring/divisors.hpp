#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ngring/rational.hpp"
#include "ngring/unknown.hpp"

namespace ngring {

enum class CurveKind { ProjectiveLine, Elliptic, HyperellipticOnePoint, Generic };

struct PointInfo {
  std::string label;
  std::optional<Rat> coord;  // ProjectiveLine finite points
  bool at_infinity = false;
  bool generic = true;
  bool weierstrass = false;  // hyperelliptic Weierstrass point
  bool bpf_witness = false;  // declared base-point-free witness
  bool origin = false;       // elliptic group origin
};

class CurveModel;
using CurvePtr = std::shared_ptr<const CurveModel>;

// Formal divisor class alpha*K_C + sum n_i P_i.  On models with a concrete
// canonical divisor, h0/principality resolve alpha internally.
class DivisorClass {
 public:
  DivisorClass(CurvePtr curve, long kc_multiple, std::map<int, long> point_part);

  const CurvePtr& curve() const { return curve_; }
  long kc_multiple() const { return kc_; }
  const std::map<int, long>& point_part() const { return points_; }
  long degree() const { return degree_; }

  bool is_zero_expression() const { return kc_ == 0 && points_.empty(); }

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass scaled(long c) const;

  std::string describe() const;

 private:
  CurvePtr curve_;
  long kc_ = 0;
  std::map<int, long> points_;  // nonzero entries only
  long degree_ = 0;             // cached: kc*(2g-2) + sum of coefficients
};

class QDivisor;

class IntegralDivisor {
 public:
  IntegralDivisor(CurvePtr curve, std::map<int, Int> coeffs);

  const CurvePtr& curve() const { return curve_; }
  const std::map<int, Int>& coefficients() const { return coeffs_; }
  Int coefficient(int point) const;
  Int degree() const;

  QDivisor as_qdivisor() const;
  DivisorClass as_class() const;

  IntegralDivisor operator+(const IntegralDivisor& o) const;
  IntegralDivisor operator-() const;

  std::string describe() const;

 private:
  CurvePtr curve_;
  std::map<int, Int> coeffs_;  // nonzero entries only
};

class QDivisor {
 public:
  QDivisor(CurvePtr curve, std::map<int, Rat> coeffs);

  const CurvePtr& curve() const { return curve_; }
  const std::map<int, Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(int point) const;
  Rat degree() const;
  bool is_integral() const;

  QDivisor operator+(const QDivisor& o) const;
  QDivisor operator-(const QDivisor& o) const;
  QDivisor scaled(const Rat& c) const;

  // lcm of coefficient denominators (1 for integral divisors)
  Int denominator_lcm() const;
  long fractional_point_count() const;

  std::string describe() const;

 private:
  CurvePtr curve_;
  std::map<int, Rat> coeffs_;  // nonzero entries only
};

class CurveModel : public std::enable_shared_from_this<CurveModel> {
 public:
  // P_infinity is appended automatically when absent; K is fixed as -2*P_inf.
  static CurvePtr projective_line(std::vector<PointInfo> points);
  // Exactly one point must be marked origin.  Each relation declares a
  // degree-zero combination to be principal; undeclared combinations of
  // generic points are independent.
  static CurvePtr elliptic(std::vector<PointInfo> points,
                           std::vector<std::map<int, long>> relations = {});
  static CurvePtr hyperelliptic_one_point(long genus, std::string label = "P");
  static CurvePtr generic(long genus, BoolOrUnknown hyperelliptic, std::vector<PointInfo> points);

  CurveKind kind() const { return kind_; }
  long genus() const { return genus_; }
  BoolOrUnknown hyperelliptic() const { return hyperelliptic_; }
  const std::vector<PointInfo>& points() const { return points_; }
  const PointInfo& point(int i) const { return points_.at(static_cast<size_t>(i)); }
  long point_count() const { return static_cast<long>(points_.size()); }

  int find_point(const std::string& label) const;  // -1 when absent
  int point_index(const std::string& label) const;  // throws when absent
  int infinity_index() const { return infinity_; }
  int origin_index() const { return origin_; }

  const std::vector<std::map<int, long>>& relations() const { return relations_; }

  DivisorClass canonical_class() const;
  // Concrete canonical divisor when the model has one (P1: -2*P_inf,
  // elliptic: 0, hyperelliptic point: (2g-2)P); nullopt on Generic.
  std::optional<IntegralDivisor> canonical_divisor() const;

  QDivisor qdivisor(std::map<int, Rat> coeffs) const;
  IntegralDivisor integral_divisor(std::map<int, Int> coeffs) const;
  DivisorClass divisor_class(long kc_multiple, std::map<int, long> point_part) const;

 private:
  CurveModel() = default;
  static void check_labels(const std::vector<PointInfo>& points);

  CurveKind kind_ = CurveKind::Generic;
  long genus_ = 0;
  BoolOrUnknown hyperelliptic_ = BoolOrUnknown::unknown("not declared");
  std::vector<PointInfo> points_;
  int infinity_ = -1;
  int origin_ = -1;
  std::vector<std::map<int, long>> relations_;
};

// Coefficientwise floor: the maximal integral divisor <= D.
IntegralDivisor round_down(const QDivisor& d);

// At each point with coefficient denominator q > 1, the value (q-1)/q.
QDivisor frc(const QDivisor& d);

struct Arm {
  int point;
  Int p;
  Int q;  // 0 < p < q, gcd(p, q) = 1
};

struct NormalForm {
  IntegralDivisor b;
  std::vector<Arm> arms;
};

// D = B - sum (p_i/q_i) P_i with 0 < p_i < q_i.
NormalForm normalize(const QDivisor& d);

// Class of alpha*K_C + [q] (floors commute with the integral K-part).
DivisorClass round_class(long kc_multiple, const QDivisor& q);

NatOrUnknown h0(const CurvePtr& curve, const DivisorClass& e);
NatOrUnknown h1(const CurvePtr& curve, const DivisorClass& e);
BoolOrUnknown class_is_principal(const CurvePtr& curve, const DivisorClass& e);

// Whether e and f differ by a principal divisor.
BoolOrUnknown classes_equivalent(const DivisorClass& e, const DivisorClass& f);

}  // namespace ngring

#include "ngring/divisors.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ngring {

namespace {

template <class M>
void drop_zeros(M& m) {
  for (auto it = m.begin(); it != m.end();) {
    if (it->second == 0)
      it = m.erase(it);
    else
      ++it;
  }
}

void check_point_range(const CurvePtr& curve, int idx) {
  if (idx < 0 || idx >= curve->point_count())
    throw std::invalid_argument("divisor references a point outside its curve model");
}

std::string point_label(const CurvePtr& curve, int idx) { return curve->point(idx).label; }

}  // namespace

// ----- DivisorClass ---------------------------------------------------------

DivisorClass::DivisorClass(CurvePtr curve, long kc_multiple, std::map<int, long> point_part)
    : curve_(std::move(curve)), kc_(kc_multiple), points_(std::move(point_part)) {
  if (!curve_) throw std::invalid_argument("divisor class without a curve");
  drop_zeros(points_);
  long sum = 0;
  for (const auto& [i, c] : points_) {
    check_point_range(curve_, i);
    sum += c;
  }
  degree_ = kc_ * (2 * curve_->genus() - 2) + sum;
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  if (curve_ != o.curve_) throw std::invalid_argument("classes on different curves");
  std::map<int, long> pts = points_;
  for (const auto& [i, c] : o.points_) pts[i] += c;
  return DivisorClass(curve_, kc_ + o.kc_, std::move(pts));
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  return *this + o.scaled(-1);
}

DivisorClass DivisorClass::scaled(long c) const {
  std::map<int, long> pts;
  if (c != 0)
    for (const auto& [i, v] : points_) pts[i] = c * v;
  return DivisorClass(curve_, kc_ * c, std::move(pts));
}

std::string DivisorClass::describe() const {
  std::ostringstream os;
  bool first = true;
  auto sep = [&](long c) {
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
  };
  if (kc_ != 0) {
    sep(kc_);
    if (std::abs(kc_) != 1) os << std::abs(kc_) << "*";
    os << "K";
  }
  for (const auto& [i, c] : points_) {
    sep(c);
    if (std::abs(c) != 1) os << std::abs(c) << "*";
    os << point_label(curve_, i);
  }
  if (first) os << "0";
  return os.str();
}

// ----- IntegralDivisor ------------------------------------------------------

IntegralDivisor::IntegralDivisor(CurvePtr curve, std::map<int, Int> coeffs)
    : curve_(std::move(curve)), coeffs_(std::move(coeffs)) {
  if (!curve_) throw std::invalid_argument("divisor without a curve");
  drop_zeros(coeffs_);
  for (const auto& [i, c] : coeffs_) check_point_range(curve_, i);
}

Int IntegralDivisor::coefficient(int point) const {
  auto it = coeffs_.find(point);
  return it == coeffs_.end() ? Int(0) : it->second;
}

Int IntegralDivisor::degree() const {
  Int d = 0;
  for (const auto& [i, c] : coeffs_) d += c;
  return d;
}

QDivisor IntegralDivisor::as_qdivisor() const {
  std::map<int, Rat> q;
  for (const auto& [i, c] : coeffs_) q[i] = Rat(c);
  return QDivisor(curve_, std::move(q));
}

DivisorClass IntegralDivisor::as_class() const {
  std::map<int, long> pts;
  for (const auto& [i, c] : coeffs_) pts[i] = to_long(c);
  return DivisorClass(curve_, 0, std::move(pts));
}

IntegralDivisor IntegralDivisor::operator+(const IntegralDivisor& o) const {
  if (curve_ != o.curve_) throw std::invalid_argument("divisors on different curves");
  std::map<int, Int> c = coeffs_;
  for (const auto& [i, v] : o.coeffs_) c[i] += v;
  return IntegralDivisor(curve_, std::move(c));
}

IntegralDivisor IntegralDivisor::operator-() const {
  std::map<int, Int> c;
  for (const auto& [i, v] : coeffs_) c[i] = -v;
  return IntegralDivisor(curve_, std::move(c));
}

std::string IntegralDivisor::describe() const { return as_qdivisor().describe(); }

// ----- QDivisor -------------------------------------------------------------

QDivisor::QDivisor(CurvePtr curve, std::map<int, Rat> coeffs)
    : curve_(std::move(curve)), coeffs_(std::move(coeffs)) {
  if (!curve_) throw std::invalid_argument("divisor without a curve");
  drop_zeros(coeffs_);
  for (const auto& [i, c] : coeffs_) check_point_range(curve_, i);
}

Rat QDivisor::coefficient(int point) const {
  auto it = coeffs_.find(point);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

Rat QDivisor::degree() const {
  Rat d(0);
  for (const auto& [i, c] : coeffs_) d += c;
  return d;
}

bool QDivisor::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const auto& kv) { return ngring::is_integral(kv.second); });
}

QDivisor QDivisor::operator+(const QDivisor& o) const {
  if (curve_ != o.curve_) throw std::invalid_argument("divisors on different curves");
  std::map<int, Rat> c = coeffs_;
  for (const auto& [i, v] : o.coeffs_) c[i] += v;
  return QDivisor(curve_, std::move(c));
}

QDivisor QDivisor::operator-(const QDivisor& o) const { return *this + o.scaled(Rat(-1)); }

QDivisor QDivisor::scaled(const Rat& c) const {
  std::map<int, Rat> out;
  if (c != 0)
    for (const auto& [i, v] : coeffs_) out[i] = c * v;
  return QDivisor(curve_, std::move(out));
}

Int QDivisor::denominator_lcm() const {
  Int l(1);
  for (const auto& [i, c] : coeffs_) l = int_lcm(l, den(c));
  return l;
}

long QDivisor::fractional_point_count() const {
  long n = 0;
  for (const auto& [i, c] : coeffs_)
    if (!ngring::is_integral(c)) ++n;
  return n;
}

std::string QDivisor::describe() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : coeffs_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    if (first && c < 0) os << "-";
    first = false;
    Rat a = c < 0 ? Rat(-c) : c;
    if (a != 1) os << rat_str(a) << "*";
    os << point_label(curve_, i);
  }
  if (first) os << "0";
  return os.str();
}

// ----- CurveModel -----------------------------------------------------------

void CurveModel::check_labels(const std::vector<PointInfo>& points) {
  std::set<std::string> seen;
  for (const auto& p : points) {
    if (p.label.empty()) throw std::invalid_argument("point with empty label");
    if (!seen.insert(p.label).second)
      throw std::invalid_argument("duplicate point label \"" + p.label + "\"");
  }
}

CurvePtr CurveModel::projective_line(std::vector<PointInfo> points) {
  auto m = std::shared_ptr<CurveModel>(new CurveModel());
  m->kind_ = CurveKind::ProjectiveLine;
  m->genus_ = 0;
  m->hyperelliptic_ = BoolOrUnknown(false);
  int inf = -1;
  std::set<Rat> coords;
  for (size_t i = 0; i < points.size(); ++i) {
    auto& p = points[i];
    if (p.at_infinity) {
      if (inf >= 0) throw std::invalid_argument("two points at infinity");
      inf = static_cast<int>(i);
      p.coord.reset();
    } else {
      if (!p.coord) throw std::invalid_argument("P1 point \"" + p.label + "\" needs a coordinate");
      if (!coords.insert(*p.coord).second)
        throw std::invalid_argument("P1 points must have distinct coordinates");
    }
  }
  if (inf < 0) {
    PointInfo p;
    p.label = "inf";
    p.at_infinity = true;
    points.push_back(p);
    inf = static_cast<int>(points.size()) - 1;
  }
  check_labels(points);
  m->points_ = std::move(points);
  m->infinity_ = inf;
  return m;
}

CurvePtr CurveModel::elliptic(std::vector<PointInfo> points,
                              std::vector<std::map<int, long>> relations) {
  check_labels(points);
  auto m = std::shared_ptr<CurveModel>(new CurveModel());
  m->kind_ = CurveKind::Elliptic;
  m->genus_ = 1;
  m->hyperelliptic_ = BoolOrUnknown(false);
  int origin = -1;
  for (size_t i = 0; i < points.size(); ++i) {
    if (points[i].origin) {
      if (origin >= 0) throw std::invalid_argument("two marked origins");
      origin = static_cast<int>(i);
    }
  }
  if (origin < 0) throw std::invalid_argument("elliptic model needs a marked origin");
  for (const auto& rel : relations) {
    long deg = 0;
    for (const auto& [i, c] : rel) {
      if (i < 0 || i >= static_cast<int>(points.size()))
        throw std::invalid_argument("relation references unknown point");
      deg += c;
    }
    if (deg != 0) throw std::invalid_argument("declared relation must have degree zero");
  }
  m->points_ = std::move(points);
  m->origin_ = origin;
  m->relations_ = std::move(relations);
  return m;
}

CurvePtr CurveModel::hyperelliptic_one_point(long genus, std::string label) {
  if (genus < 2) throw std::invalid_argument("hyperelliptic one-point model needs genus >= 2");
  auto m = std::shared_ptr<CurveModel>(new CurveModel());
  m->kind_ = CurveKind::HyperellipticOnePoint;
  m->genus_ = genus;
  m->hyperelliptic_ = BoolOrUnknown(true);
  PointInfo p;
  p.label = std::move(label);
  p.generic = false;
  p.weierstrass = true;
  m->points_ = {p};
  return m;
}

CurvePtr CurveModel::generic(long genus, BoolOrUnknown hyperelliptic,
                             std::vector<PointInfo> points) {
  if (genus < 0) throw std::invalid_argument("negative genus");
  check_labels(points);
  auto m = std::shared_ptr<CurveModel>(new CurveModel());
  m->kind_ = CurveKind::Generic;
  m->genus_ = genus;
  m->hyperelliptic_ = hyperelliptic;
  m->points_ = std::move(points);
  return m;
}

int CurveModel::find_point(const std::string& label) const {
  for (size_t i = 0; i < points_.size(); ++i)
    if (points_[i].label == label) return static_cast<int>(i);
  return -1;
}

int CurveModel::point_index(const std::string& label) const {
  int i = find_point(label);
  if (i < 0) throw std::invalid_argument("unknown point \"" + label + "\"");
  return i;
}

DivisorClass CurveModel::canonical_class() const {
  return DivisorClass(shared_from_this(), 1, {});
}

std::optional<IntegralDivisor> CurveModel::canonical_divisor() const {
  auto self = shared_from_this();
  switch (kind_) {
    case CurveKind::ProjectiveLine:
      return IntegralDivisor(self, {{infinity_, Int(-2)}});
    case CurveKind::Elliptic:
      return IntegralDivisor(self, {});
    case CurveKind::HyperellipticOnePoint:
      return IntegralDivisor(self, {{0, Int(2 * genus_ - 2)}});
    case CurveKind::Generic:
      return std::nullopt;
  }
  return std::nullopt;
}

QDivisor CurveModel::qdivisor(std::map<int, Rat> coeffs) const {
  return QDivisor(shared_from_this(), std::move(coeffs));
}

IntegralDivisor CurveModel::integral_divisor(std::map<int, Int> coeffs) const {
  return IntegralDivisor(shared_from_this(), std::move(coeffs));
}

DivisorClass CurveModel::divisor_class(long kc_multiple, std::map<int, long> point_part) const {
  return DivisorClass(shared_from_this(), kc_multiple, std::move(point_part));
}

// ----- divisor operations ---------------------------------------------------

IntegralDivisor round_down(const QDivisor& d) {
  std::map<int, Int> out;
  for (const auto& [i, c] : d.coefficients()) out[i] = rat_floor(c);
  return IntegralDivisor(d.curve(), std::move(out));
}

QDivisor frc(const QDivisor& d) {
  std::map<int, Rat> out;
  for (const auto& [i, c] : d.coefficients()) {
    Int q = den(c);
    if (q > 1) out[i] = Rat(q - 1, q);
  }
  return QDivisor(d.curve(), std::move(out));
}

NormalForm normalize(const QDivisor& d) {
  std::map<int, Int> b;
  std::vector<Arm> arms;
  for (const auto& [i, c] : d.coefficients()) {
    Int ceil = rat_ceil(c);
    b[i] = ceil;
    Rat frac = Rat(ceil) - c;  // in [0, 1)
    if (frac != 0) arms.push_back(Arm{i, num(frac), den(frac)});
  }
  return NormalForm{IntegralDivisor(d.curve(), std::move(b)), std::move(arms)};
}

DivisorClass round_class(long kc_multiple, const QDivisor& q) {
  IntegralDivisor fl = round_down(q);
  std::map<int, long> pts;
  for (const auto& [i, c] : fl.coefficients()) pts[i] = to_long(c);
  return DivisorClass(q.curve(), kc_multiple, std::move(pts));
}

// ----- principality ---------------------------------------------------------

namespace {

// Integer lattice membership: is v an integer combination of the rows?
bool in_span_z(std::vector<std::map<int, Int>> rows, std::map<int, Int> v) {
  drop_zeros(v);
  while (!v.empty()) {
    int col = v.begin()->first;
    // combine all rows with a nonzero entry in col into one with the gcd
    std::vector<size_t> touching;
    for (size_t r = 0; r < rows.size(); ++r)
      if (rows[r].count(col) && rows[r][col] != 0) touching.push_back(r);
    if (touching.empty()) return false;
    while (touching.size() > 1) {
      // reduce the larger entry by the smaller (euclidean step on the column)
      size_t a = touching[touching.size() - 2], b = touching.back();
      Int ca = rows[a][col], cb = rows[b][col];
      if (abs(ca) < abs(cb)) std::swap(a, b), std::swap(ca, cb);
      Int f = ca / cb;
      for (const auto& [i, c] : rows[b]) rows[a][i] -= f * c;
      drop_zeros(rows[a]);
      touching.clear();
      for (size_t r = 0; r < rows.size(); ++r)
        if (rows[r].count(col) && rows[r][col] != 0) touching.push_back(r);
    }
    size_t pivot = touching.front();
    Int g = rows[pivot][col];
    if (v[col] % g != 0) return false;
    Int f = v[col] / g;
    for (const auto& [i, c] : rows[pivot]) v[i] -= f * c;
    drop_zeros(v);
    rows.erase(rows.begin() + static_cast<long>(pivot));
  }
  return true;
}

BoolOrUnknown principal_elliptic(const CurvePtr& curve, const DivisorClass& e) {
  // K_C is trivial on an elliptic curve; only the point part matters.
  std::vector<std::map<int, Int>> rows;
  for (const auto& rel : curve->relations()) {
    std::map<int, Int> r;
    for (const auto& [i, c] : rel) r[i] = c;
    rows.push_back(std::move(r));
  }
  std::map<int, Int> v;
  for (const auto& [i, c] : e.point_part()) v[i] = c;
  return BoolOrUnknown(in_span_z(std::move(rows), std::move(v)));
}

BoolOrUnknown principal_generic(const CurvePtr& curve, const DivisorClass& e) {
  long g = curve->genus();
  long alpha = e.kc_multiple();
  std::map<int, long> v = e.point_part();

  bool touches_weierstrass = false;
  for (const auto& [i, c] : v)
    if (curve->point(i).weierstrass) touches_weierstrass = true;

  if (alpha != 0 && touches_weierstrass) {
    BoolOrUnknown hyp = curve->hyperelliptic();
    if (!hyp.known())
      return BoolOrUnknown::unknown("principality of " + e.describe() +
                                    " needs the hyperelliptic flag");
    if (*hyp) {
      // substitute K ~ (2g-2) W at a Weierstrass point in the support
      int w = -1;
      for (const auto& [i, c] : v)
        if (curve->point(i).weierstrass) {
          w = i;
          break;
        }
      v[w] += alpha * (2 * g - 2);
      alpha = 0;
      if (v[w] == 0) v.erase(w);
    }
  }

  long weierstrass_in_support = 0;
  for (const auto& [i, c] : v)
    if (curve->point(i).weierstrass) ++weierstrass_in_support;

  if (alpha == 0 && weierstrass_in_support >= 2) {
    BoolOrUnknown hyp = curve->hyperelliptic();
    if (!hyp.known())
      return BoolOrUnknown::unknown("relation between Weierstrass points of " + e.describe() +
                                    " needs the hyperelliptic flag");
    if (!*hyp)
      return BoolOrUnknown::unknown("Weierstrass-marked points on a non-hyperelliptic model");
    // 2W_i ~ 2W_j: move even parts onto the first Weierstrass point
    int w0 = -1;
    for (const auto& [i, c] : v)
      if (curve->point(i).weierstrass) {
        w0 = i;
        break;
      }
    {
      for (auto& [i, c] : v) {
        if (i == w0 || !curve->point(i).weierstrass) continue;
        long rem = ((c % 2) + 2) % 2;
        v[w0] += c - rem;
        c = rem;
      }
      drop_zeros(v);
      long odd_weierstrass = 0;
      for (const auto& [i, c] : v)
        if (curve->point(i).weierstrass) ++odd_weierstrass;
      if (odd_weierstrass >= 3)
        return BoolOrUnknown::unknown("two-torsion combination of " +
                                      std::to_string(odd_weierstrass) +
                                      " Weierstrass points undecided");
      // 0, 1 or 2 leftover Weierstrass points: distinct two-torsion classes
      // do not vanish, so fall through to the independence verdict.
    }
  }

  if (alpha == 0 && v.empty()) return BoolOrUnknown(true);
  // Symbolic points are in general position: a nonzero formal combination of
  // K and generic points is non-principal.
  return BoolOrUnknown(false);
}

}  // namespace

BoolOrUnknown class_is_principal(const CurvePtr& curve, const DivisorClass& e) {
  if (e.curve() != curve) throw std::invalid_argument("class on wrong curve");
  if (e.degree() != 0) return BoolOrUnknown(false);
  switch (curve->kind()) {
    case CurveKind::ProjectiveLine:
      return BoolOrUnknown(true);
    case CurveKind::Elliptic:
      return principal_elliptic(curve, e);
    case CurveKind::HyperellipticOnePoint: {
      // class = (alpha(2g-2) + n) P; degree zero forces the multiple to be 0
      return BoolOrUnknown(true);
    }
    case CurveKind::Generic:
      return principal_generic(curve, e);
  }
  throw std::logic_error("unreachable curve kind");
}

BoolOrUnknown classes_equivalent(const DivisorClass& e, const DivisorClass& f) {
  return class_is_principal(e.curve(), e - f);
}

// ----- dimension engines ----------------------------------------------------

namespace {

NatOrUnknown h0_generic(const CurvePtr& curve, const DivisorClass& e) {
  long g = curve->genus();
  long deg = e.degree();
  if (deg < 0) return NatOrUnknown(0);
  if (deg == 0) {
    BoolOrUnknown p = class_is_principal(curve, e);
    if (!p.known()) return NatOrUnknown::unknown(p.reason());
    return NatOrUnknown(*p ? 1 : 0);
  }
  if (deg >= 2 * g - 1) return NatOrUnknown(deg - g + 1);
  if (deg == 2 * g - 2) {
    BoolOrUnknown is_k = classes_equivalent(e, curve->canonical_class());
    if (!is_k.known()) return NatOrUnknown::unknown(is_k.reason());
    return NatOrUnknown(*is_k ? g : g - 1);
  }
  if (e.kc_multiple() == 0 && deg <= g - 1) {
    bool effective_generic = true;
    for (const auto& [i, c] : e.point_part()) {
      const PointInfo& p = curve->point(i);
      if (c < 0 || !p.generic || p.weierstrass) effective_generic = false;
    }
    if (effective_generic) return NatOrUnknown(1);
  }
  return NatOrUnknown::unknown("h0 of special divisor " + e.describe() +
                               " undecided on a generic curve");
}

}  // namespace

NatOrUnknown h0(const CurvePtr& curve, const DivisorClass& e) {
  if (e.curve() != curve) throw std::invalid_argument("class on wrong curve");
  long deg = e.degree();
  switch (curve->kind()) {
    case CurveKind::ProjectiveLine:
      return NatOrUnknown(std::max(deg + 1, 0L));
    case CurveKind::Elliptic: {
      if (deg < 0) return NatOrUnknown(0);
      if (deg >= 1) return NatOrUnknown(deg);
      BoolOrUnknown p = class_is_principal(curve, e);
      if (!p.known()) return NatOrUnknown::unknown(p.reason());
      return NatOrUnknown(*p ? 1 : 0);
    }
    case CurveKind::HyperellipticOnePoint: {
      long g = curve->genus();
      long m = deg;  // class is m*P with m = the degree
      if (m < 0) return NatOrUnknown(0);
      if (m <= 2 * g - 1) return NatOrUnknown(1 + m / 2);
      return NatOrUnknown(m - g + 1);
    }
    case CurveKind::Generic:
      return h0_generic(curve, e);
  }
  throw std::logic_error("unreachable curve kind");
}

NatOrUnknown h1(const CurvePtr& curve, const DivisorClass& e) {
  if (e.curve() != curve) throw std::invalid_argument("class on wrong curve");
  return h0(curve, curve->canonical_class() - e);
}

}  // namespace ngring

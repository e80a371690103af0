#pragma once

#include <map>
#include <random>
#include <vector>

#include "ngring/divisors.hpp"

namespace ngring::testing {

inline CurvePtr random_p1(std::mt19937_64& rng, long max_points = 5) {
  long n = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_points));
  std::vector<PointInfo> pts;
  for (long i = 0; i < n; ++i) {
    PointInfo p;
    p.label = "A" + std::to_string(i);
    p.coord = Rat(i);  // distinct by construction
    pts.push_back(p);
  }
  return CurveModel::projective_line(std::move(pts));
}

inline CurvePtr random_elliptic(std::mt19937_64& rng, long max_points = 4) {
  long n = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_points));
  std::vector<PointInfo> pts;
  for (long i = 0; i < n; ++i) {
    PointInfo p;
    p.label = "E" + std::to_string(i);
    if (i == 0) p.origin = true;
    pts.push_back(p);
  }
  return CurveModel::elliptic(std::move(pts));
}

inline CurvePtr random_generic(std::mt19937_64& rng, long genus, long max_points = 4) {
  long n = 1 + static_cast<long>(rng() % static_cast<unsigned long>(max_points));
  std::vector<PointInfo> pts;
  for (long i = 0; i < n; ++i) {
    PointInfo p;
    p.label = "G" + std::to_string(i);
    pts.push_back(p);
  }
  return CurveModel::generic(genus, BoolOrUnknown::unknown("not declared"), std::move(pts));
}

inline QDivisor random_qdivisor(std::mt19937_64& rng, const CurvePtr& curve) {
  std::map<int, Rat> coeffs;
  std::uniform_int_distribution<long> numer(-12, 12);
  std::uniform_int_distribution<long> denom(1, 8);
  for (int i = 0; i < curve->point_count(); ++i) {
    if (rng() % 4 == 0) continue;  // sometimes skip a point
    coeffs[i] = Rat(numer(rng), denom(rng));
  }
  return QDivisor(curve, std::move(coeffs));
}

inline DivisorClass random_class(std::mt19937_64& rng, const CurvePtr& curve, long kc_range = 3) {
  std::uniform_int_distribution<long> kc(-kc_range, kc_range);
  std::uniform_int_distribution<long> coef(-4, 4);
  std::map<int, long> pts;
  for (int i = 0; i < curve->point_count(); ++i)
    if (rng() % 3 != 0) pts[i] = coef(rng);
  return DivisorClass(curve, curve->kind() == CurveKind::Elliptic ? 0 : kc(rng), std::move(pts));
}

}  // namespace ngring::testing

#pragma once

#include <set>
#include <string>
#include <vector>

#include "ngring/divisors.hpp"
#include "ngring/unknown.hpp"

namespace ngring {

// Verdicts produced by the classification rule tables.
enum class RuleKind {
  Gorenstein,
  NearlyGorensteinNotGorenstein,
  NotNearlyGorenstein,
  AlmostGorenstein,
  NotAlmostGorenstein,
  Unknown,
};

std::string rule_kind_str(RuleKind k);

// Declared facts accepted as input flags.  Prefix "not:" negates.
//   D~K+P          D ~ K_C + P for some point P
//   D~K-P          D ~ K_C - P for a hyperelliptic point P
//   D~2K, D~3K     D ~ 2K_C, D ~ 3K_C
//   D~3K-P         D ~ 3K_C - P for some point P
//   D~3W, D~6W     D ~ 3P resp. 6P for a hyperelliptic point P
//   h0(3K-D)=0     H^0(3K_C - D) vanishes
//   h0(D-K)=2      dim H^0(D - K_C) = 2
//   bpf(D-K)       O(D - K_C) is base-point free
//   O(D)-generated O_C(D) is generated by global sections
//   R1=K0*L1       the multiplication K_0 x L_1 -> R_1 is surjective
struct SymbolicConeInput {
  CurvePtr curve;  // Generic or HyperellipticOnePoint, genus >= 2
  DivisorClass d;  // integral ample divisor class
  std::set<std::string> flags;
};

SymbolicConeInput make_cone_input(CurvePtr curve, DivisorClass d,
                                  std::set<std::string> flags = {});

struct RuleVerdict {
  RuleKind kind = RuleKind::Unknown;
  std::string rule_id;
  std::vector<std::string> preconditions_used;
  std::string detail;  // for Unknown: the missing fact
};

RuleVerdict classify_cone(const SymbolicConeInput& input);

RuleVerdict almost_gorenstein_g2(const SymbolicConeInput& input);

struct ComparisonReport {
  RuleVerdict ng;
  RuleVerdict ag;
  std::string category;  // gorenstein | ng-and-ag | ng-only | ag-only | neither | unknown
  std::string case_id;   // set when a listed comparison case matches
};

ComparisonReport compare_ng_ag_g2(const SymbolicConeInput& input);

}  // namespace ngring

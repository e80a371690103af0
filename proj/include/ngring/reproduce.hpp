#pragma once

#include <string>
#include <vector>

#include "ngring/cone_rules.hpp"
#include "ngring/demazure.hpp"
#include "ngring/divisors.hpp"
#include "ngring/hypersurface.hpp"
#include "ngring/verdict.hpp"

namespace ngring::tables {

// The (2,3,5) hypersurface as a Demazure pair on P1:
// D = -P0 + (1/2)P1 + (1/3)P2 + (1/5)P3.
DemazurePair e8_pair();

// The (r, p/q) family on P1: D = (r-1)Q - (p/q)(P_1 + ... + P_r).
// Not validated for ampleness; callers get formal pairs for every cell.
DemazurePair family_pair(long r, const Rat& pq);

struct E8Row {
  long d;
  bool ng;
};
// d coprime to 30, 1 <= d <= 30, decided through
// normalize -> star_graph -> blow_down -> fundamental_cycle -> mowy_ng.
std::vector<E8Row> e8_list();

struct HypRow {
  long d;
  NGKind verdict;
};
// veronese_ng over d = 1..4g+4 for the hyperelliptic preset of that genus.
std::vector<HypRow> hyperelliptic_table(long genus);

struct FamilyRow {
  long r;
  Rat pq;
  OrUnknown<SingType> type = OrUnknown<SingType>::unknown("not computed");
  NatOrUnknown a = NatOrUnknown::unknown("not computed");
  NatOrUnknown pg = NatOrUnknown::unknown("not computed");
  NatOrUnknown m = NatOrUnknown::unknown("not computed");
  NatOrUnknown dim_k1 = NatOrUnknown::unknown("not computed");
  BoolOrUnknown gorenstein = BoolOrUnknown::unknown("not computed");
  NGVerdict ng;
};
// r in {3,4,5} x p/q in {1/3, 1/2, 4/7, 5/8, 2/3, 3/4}.
std::vector<FamilyRow> family_grid();

struct ConeFixture {
  std::string name;
  SymbolicConeInput input;
  RuleKind expected;
};
std::vector<ConeFixture> genus2_fixtures();
std::vector<ConeFixture> genus3_fixtures();

struct CompareFixture {
  std::string name;
  SymbolicConeInput input;
  std::string expected_category;
  std::string expected_case;  // empty when no listed case applies
};
std::vector<CompareFixture> comparison_fixtures();

}  // namespace ngring::tables

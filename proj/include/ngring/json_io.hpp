#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "ngring/cone_rules.hpp"
#include "ngring/demazure.hpp"
#include "ngring/divisors.hpp"
#include "ngring/hypersurface.hpp"
#include "ngring/resolution.hpp"
#include "ngring/unknown.hpp"
#include "ngring/verdict.hpp"

namespace ngring {

using Json = nlohmann::json;

struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"curve": {...}, "divisor": [{"point": ..., "coeff": "a/b"}]}
QDivisor parse_divisor_input(const Json& j);
CurvePtr parse_curve(const Json& j);
Json divisor_to_json(const QDivisor& d);

// {"vertices": [{"id", "w", "g"}], "edges": [[a, b]]}
ResolutionGraph parse_graph(const Json& j);
Json graph_to_json(const ResolutionGraph& g);
Json cycle_to_json(const Cycle& z);

// {"genus", "model"?, "hyperelliptic"?, "points"?, "class": {...}, "flags": []}
SymbolicConeInput parse_cone_input(const Json& j);

// {"preset": "hyperelliptic", "genus": g} | {"preset": "e8"} | {"custom": {...}}
WeightedHypersurface parse_ring_preset(const Json& j);

Json nat_to_json(const NatOrUnknown& v);
Json bool_to_json(const BoolOrUnknown& v);
Json verdict_to_json(const NGVerdict& v);
Json rule_verdict_to_json(const RuleVerdict& v);
Json comparison_to_json(const ComparisonReport& r);
Json profile_to_json(const GradedRingProfile& p, const BoolOrUnknown& gorenstein,
                     const NGVerdict& ng);

Json load_json_file(const std::string& path);

}  // namespace ngring

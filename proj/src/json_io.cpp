#include "ngring/json_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <vector>

namespace ngring {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw SchemaError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

long require_int(const Json& j, const char* key) {
  const Json& v = require(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field \"") + key + "\" must be an integer");
  return v.get<long>();
}

PointInfo parse_point(const Json& j) {
  PointInfo p;
  p.label = require(j, "label").get<std::string>();
  if (j.contains("coord")) {
    std::string c = j.at("coord").get<std::string>();
    if (c == "inf" || c == "oo")
      p.at_infinity = true;
    else
      p.coord = parse_rat(c);
  }
  if (j.contains("attrs")) {
    for (const auto& a : j.at("attrs")) {
      std::string s = a.get<std::string>();
      if (s == "generic") {
        p.generic = true;
      } else if (s == "hyperelliptic-weierstrass") {
        p.weierstrass = true;
        p.generic = false;
      } else if (s == "basepoint-free-witness") {
        p.bpf_witness = true;
      } else if (s == "origin") {
        p.origin = true;
      } else {
        throw SchemaError("unknown point attribute \"" + s + "\"");
      }
    }
  }
  return p;
}

}  // namespace

CurvePtr parse_curve(const Json& j) {
  std::string model = require(j, "model").get<std::string>();
  std::vector<PointInfo> points;
  if (j.contains("points"))
    for (const auto& pj : j.at("points")) points.push_back(parse_point(pj));

  if (model == "P1") {
    if (j.contains("genus") && j.at("genus").get<long>() != 0)
      throw SchemaError("P1 has genus 0");
    return CurveModel::projective_line(std::move(points));
  }
  if (model == "elliptic") {
    if (j.contains("genus") && j.at("genus").get<long>() != 1)
      throw SchemaError("elliptic curves have genus 1");
    std::vector<std::map<int, long>> relations;
    if (j.contains("relations")) {
      // labels are resolved after the point list is known
      std::map<std::string, int> idx;
      for (size_t i = 0; i < points.size(); ++i) idx[points[i].label] = static_cast<int>(i);
      for (const auto& rj : j.at("relations")) {
        std::map<int, long> rel;
        for (auto it = rj.begin(); it != rj.end(); ++it) {
          auto f = idx.find(it.key());
          if (f == idx.end()) throw SchemaError("relation uses unknown point \"" + it.key() + "\"");
          rel[f->second] = it.value().get<long>();
        }
        relations.push_back(std::move(rel));
      }
    }
    return CurveModel::elliptic(std::move(points), std::move(relations));
  }
  if (model == "hyperelliptic-point") {
    long genus = require_int(j, "genus");
    std::string label = points.empty() ? std::string("P") : points.front().label;
    if (points.size() > 1) throw SchemaError("hyperelliptic-point model has exactly one point");
    return CurveModel::hyperelliptic_one_point(genus, label);
  }
  if (model == "generic") {
    long genus = require_int(j, "genus");
    BoolOrUnknown hyp = BoolOrUnknown::unknown("not declared");
    if (j.contains("hyperelliptic")) hyp = BoolOrUnknown(j.at("hyperelliptic").get<bool>());
    return CurveModel::generic(genus, hyp, std::move(points));
  }
  throw SchemaError("unknown curve model \"" + model + "\"");
}

QDivisor parse_divisor_input(const Json& j) {
  CurvePtr curve = parse_curve(require(j, "curve"));
  const Json& dj = require(j, "divisor");
  if (!dj.is_array() || dj.empty()) throw SchemaError("\"divisor\" must be a nonempty array");
  std::map<int, Rat> coeffs;
  for (const auto& t : dj) {
    std::string label = require(t, "point").get<std::string>();
    int idx = curve->find_point(label);
    if (idx < 0) throw SchemaError("divisor names unknown point \"" + label + "\"");
    Rat c = parse_rat(require(t, "coeff").get<std::string>());
    coeffs[idx] += c;
  }
  return QDivisor(curve, std::move(coeffs));
}

Json divisor_to_json(const QDivisor& d) {
  Json pts = Json::array();
  for (const auto& p : d.curve()->points()) {
    Json pj{{"label", p.label}};
    if (p.at_infinity)
      pj["coord"] = "inf";
    else if (p.coord)
      pj["coord"] = rat_str(*p.coord);
    Json attrs = Json::array();
    if (p.weierstrass) attrs.push_back("hyperelliptic-weierstrass");
    if (p.bpf_witness) attrs.push_back("basepoint-free-witness");
    if (p.origin) attrs.push_back("origin");
    if (!attrs.empty()) pj["attrs"] = attrs;
    pts.push_back(pj);
  }
  const char* model = nullptr;
  switch (d.curve()->kind()) {
    case CurveKind::ProjectiveLine: model = "P1"; break;
    case CurveKind::Elliptic: model = "elliptic"; break;
    case CurveKind::HyperellipticOnePoint: model = "hyperelliptic-point"; break;
    case CurveKind::Generic: model = "generic"; break;
  }
  Json curve{{"model", model}, {"genus", d.curve()->genus()}, {"points", pts}};
  Json div = Json::array();
  for (const auto& [i, c] : d.coefficients())
    div.push_back({{"point", d.curve()->point(i).label}, {"coeff", rat_str(c)}});
  return Json{{"curve", curve}, {"divisor", div}};
}

ResolutionGraph parse_graph(const Json& j) {
  std::vector<GraphVertex> verts;
  for (const auto& vj : require(j, "vertices")) {
    GraphVertex v;
    v.id = static_cast<int>(require_int(vj, "id"));
    v.weight = require_int(vj, "w");
    v.genus = vj.contains("g") ? vj.at("g").get<long>() : 0;
    verts.push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  if (j.contains("edges"))
    for (const auto& ej : j.at("edges")) {
      if (!ej.is_array() || ej.size() != 2) throw SchemaError("edges are pairs [a, b]");
      edges.emplace_back(ej.at(0).get<int>(), ej.at(1).get<int>());
    }
  return ResolutionGraph(std::move(verts), std::move(edges));
}

Json graph_to_json(const ResolutionGraph& g) {
  Json verts = Json::array();
  for (const auto& v : g.vertices())
    verts.push_back({{"id", v.id}, {"w", v.weight}, {"g", v.genus}});
  Json edges = Json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  return Json{{"vertices", verts}, {"edges", edges}};
}

Json cycle_to_json(const Cycle& z) {
  Json out = Json::object();
  for (const auto& [id, c] : z) out[std::to_string(id)] = c;
  return out;
}

SymbolicConeInput parse_cone_input(const Json& j) {
  long genus = require_int(j, "genus");
  std::string model = j.contains("model") ? j.at("model").get<std::string>() : "generic";
  const Json& cj = require(j, "class");
  std::map<std::string, long> named;
  if (cj.contains("points"))
    for (auto it = cj.at("points").begin(); it != cj.at("points").end(); ++it)
      named[it.key()] = it.value().get<long>();
  long kc = cj.contains("k") ? cj.at("k").get<long>() : 0;

  CurvePtr curve;
  if (model == "hyperelliptic-point") {
    if (named.size() > 1) throw SchemaError("one-point model admits a single point");
    curve = CurveModel::hyperelliptic_one_point(genus, named.empty() ? "P" : named.begin()->first);
  } else if (model == "generic") {
    std::vector<PointInfo> points;
    std::set<std::string> declared;
    if (j.contains("points"))
      for (const auto& pj : j.at("points")) {
        points.push_back(parse_point(pj));
        declared.insert(points.back().label);
      }
    for (const auto& [label, c] : named)
      if (!declared.count(label)) {
        PointInfo p;
        p.label = label;
        points.push_back(p);
      }
    BoolOrUnknown hyp = BoolOrUnknown::unknown("not declared");
    if (j.contains("hyperelliptic")) hyp = BoolOrUnknown(j.at("hyperelliptic").get<bool>());
    curve = CurveModel::generic(genus, hyp, std::move(points));
  } else {
    throw SchemaError("cone model must be \"generic\" or \"hyperelliptic-point\"");
  }

  std::map<int, long> pts;
  for (const auto& [label, c] : named) pts[curve->point_index(label)] = c;
  DivisorClass d(curve, kc, std::move(pts));
  std::set<std::string> flags;
  if (j.contains("flags"))
    for (const auto& f : j.at("flags")) flags.insert(f.get<std::string>());
  return make_cone_input(curve, std::move(d), std::move(flags));
}

WeightedHypersurface parse_ring_preset(const Json& j) {
  if (j.contains("preset")) {
    std::string preset = j.at("preset").get<std::string>();
    if (preset == "e8") return WeightedHypersurface::e8();
    if (preset == "hyperelliptic") {
      long genus = require_int(j, "genus");
      return WeightedHypersurface::hyperelliptic(genus);
    }
    throw SchemaError("unknown ring preset \"" + preset + "\"");
  }
  const Json& c = require(j, "custom");
  const Json& wj = require(c, "weights");
  if (!wj.is_array() || wj.size() != 3) throw SchemaError("weights must be [wX, wY, wZ]");
  std::array<long, 3> w{wj.at(0).get<long>(), wj.at(1).get<long>(), wj.at(2).get<long>()};
  const Json& rj = require(c, "relation");
  Json vj = require(rj, "var");
  int designated;
  if (vj.is_number_integer()) {
    designated = vj.get<int>();
  } else {
    std::string name = vj.get<std::string>();
    designated = name == "X" ? 0 : name == "Y" ? 1 : name == "Z" ? 2 : -1;
    if (designated < 0) throw SchemaError("relation var must be X, Y or Z");
  }
  long power = require_int(rj, "power");
  std::vector<std::pair<Monomial, Rat>> tail;
  for (const auto& tj : require(rj, "tail")) {
    const Json& ej = require(tj, "e");
    if (!ej.is_array() || ej.size() != 3) throw SchemaError("tail exponents must be [a, b, c]");
    Monomial m;
    for (size_t i = 0; i < 3; ++i) m.e[i] = ej.at(i).get<long>();
    tail.emplace_back(m, parse_rat(require(tj, "c").get<std::string>()));
  }
  return WeightedHypersurface::custom(w, designated, power, std::move(tail));
}

Json nat_to_json(const NatOrUnknown& v) {
  if (v.known()) return Json(*v);
  return Json{{"unknown", v.reason()}};
}

Json bool_to_json(const BoolOrUnknown& v) {
  if (v.known()) return Json(*v);
  return Json{{"unknown", v.reason()}};
}

Json verdict_to_json(const NGVerdict& v) {
  Json ev = Json::array();
  for (const auto& e : v.evidence) ev.push_back({{"rule", e.rule}, {"detail", e.detail}});
  Json out{{"verdict", ng_kind_str(v.kind)}, {"evidence", ev}};
  if (v.witness_degree) out["witness_degree"] = *v.witness_degree;
  return out;
}

Json rule_verdict_to_json(const RuleVerdict& v) {
  Json out{{"verdict", rule_kind_str(v.kind)},
           {"rule", v.rule_id},
           {"preconditions", v.preconditions_used}};
  if (!v.detail.empty()) out["detail"] = v.detail;
  return out;
}

Json comparison_to_json(const ComparisonReport& r) {
  Json out{{"ng", rule_verdict_to_json(r.ng)},
           {"ag", rule_verdict_to_json(r.ag)},
           {"category", r.category}};
  if (!r.case_id.empty()) out["case"] = r.case_id;
  return out;
}

Json profile_to_json(const GradedRingProfile& p, const BoolOrUnknown& gorenstein,
                     const NGVerdict& ng) {
  Json type;
  if (p.sing_type.known())
    type = sing_type_str(*p.sing_type);
  else
    type = Json{{"unknown", p.sing_type.reason()}};
  return Json{{"a", nat_to_json(p.a)},       {"b", nat_to_json(p.b)},
              {"m", nat_to_json(p.m)},       {"pg", nat_to_json(p.pg)},
              {"type", type},                {"gorenstein", bool_to_json(gorenstein)},
              {"ng", verdict_to_json(ng)}};
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open input file " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("malformed JSON in " + path + ": " + e.what());
  }
  return j;
}

}  // namespace ngring

#include "ngring/cli.hpp"

#include <numeric>
#include <sstream>

#include "ngring/json_io.hpp"
#include "ngring/reproduce.hpp"
#include "ngring/resolution.hpp"

namespace ngring {

namespace {

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kUnknown = 2;

struct CommandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool is_json(const RunConfig& c) {
  if (c.format != "table" && c.format != "json")
    throw CommandError("format must be \"table\" or \"json\"");
  return c.format == "json";
}

DemazurePair load_pair(const RunConfig& c) {
  if (c.input_path.empty()) throw CommandError("command needs --input <file>");
  QDivisor d = parse_divisor_input(load_json_file(c.input_path));
  return DemazurePair::make_unchecked(std::move(d));
}

int verdict_code(NGKind k) { return k == NGKind::Unknown ? kUnknown : kOk; }
int verdict_code(RuleKind k) { return k == RuleKind::Unknown ? kUnknown : kOk; }

std::string render_nat(const NatOrUnknown& v) {
  return v.known() ? std::to_string(*v) : "unknown (" + v.reason() + ")";
}

std::string render_bool(const BoolOrUnknown& v) {
  return v.known() ? (*v ? "yes" : "no") : "unknown (" + v.reason() + ")";
}

RunResult cmd_analyze(const RunConfig& c) {
  DemazurePair pair = load_pair(c);
  GradedRingProfile prof = invariants(pair);
  BoolOrUnknown gor = gorenstein_test(pair);
  NGVerdict ng = decide(pair, c.cap);
  RunResult res;
  res.exit_code = verdict_code(ng.kind);
  if (is_json(c)) {
    res.output = profile_to_json(prof, gor, ng).dump(2) + "\n";
    return res;
  }
  std::ostringstream os;
  os << "pair: R(P, D) with D = " << pair.divisor().describe() << " on genus "
     << pair.curve()->genus() << " curve\n";
  os << "deg(D)     " << rat_str(pair.divisor().degree()) << "\n";
  os << "a          " << render_nat(prof.a) << "\n";
  os << "b          " << render_nat(prof.b) << "\n";
  os << "m          " << render_nat(prof.m) << "\n";
  os << "p_g        " << render_nat(prof.pg) << "\n";
  os << "type       "
     << (prof.sing_type.known() ? sing_type_str(*prof.sing_type)
                                : "unknown (" + prof.sing_type.reason() + ")")
     << "\n";
  os << "gorenstein " << render_bool(gor) << "\n";
  os << "verdict    " << ng_kind_str(ng.kind) << "\n";
  for (const auto& e : ng.evidence) os << "  [" << e.rule << "] " << e.detail << "\n";
  res.output = os.str();
  return res;
}

RunResult cmd_ng(const RunConfig& c) {
  DemazurePair pair = load_pair(c);
  NGVerdict ng = decide(pair, c.cap);
  RunResult res;
  res.exit_code = verdict_code(ng.kind);
  if (is_json(c)) {
    res.output = verdict_to_json(ng).dump(2) + "\n";
    return res;
  }
  std::ostringstream os;
  os << "verdict " << ng_kind_str(ng.kind) << "\n";
  if (ng.witness_degree) os << "witness degree " << *ng.witness_degree << "\n";
  for (const auto& e : ng.evidence) os << "  [" << e.rule << "] " << e.detail << "\n";
  res.output = os.str();
  return res;
}

RunResult cmd_resolve(const RunConfig& c) {
  if (c.input_path.empty()) throw CommandError("command needs --input <file>");
  Json j = load_json_file(c.input_path);
  ResolutionGraph graph;
  if (j.contains("vertices")) {
    graph = parse_graph(j);
  } else {
    QDivisor d = parse_divisor_input(j);
    if (!(d.degree() > 0)) throw CommandError("resolution needs an ample divisor (deg > 0)");
    graph = star_graph(normalize(d), d.curve()->genus());
  }
  long guard = c.graph_cap > 0 ? c.graph_cap : 4096;
  if (graph.size() > guard) throw CommandError("graph exceeds the size guard");
  bool negdef = is_negative_definite(graph);
  ResolutionGraph minimal = blow_down(graph);
  Json out{{"graph", graph_to_json(graph)},
           {"negative_definite", negdef},
           {"minimal", graph_to_json(minimal)}};
  std::ostringstream os;
  os << "vertices " << graph.size() << ", negative definite: " << (negdef ? "yes" : "no") << "\n";
  if (minimal.empty()) {
    out["smooth"] = true;
    os << "exceptional set contracts away: the point is smooth\n";
  } else if (negdef) {
    Cycle zf = fundamental_cycle(minimal);
    long pa = cycle_pa(minimal, zf);
    out["fundamental_cycle"] = cycle_to_json(zf);
    out["pa"] = pa;
    os << "minimal model: " << minimal.size() << " vertices\n";
    os << "Z_f ";
    for (const auto& [id, coeff] : zf) os << id << ":" << coeff << " ";
    os << "\np_a(Z_f) = " << pa << "\n";
    if (pa == 0) {
      bool ng = mowy_ng(minimal);
      out["anti_nef_ng"] = ng;
      os << "K + Z_f anti-nef (nearly Gorenstein): " << (ng ? "yes" : "no") << "\n";
    }
  }
  RunResult res;
  res.exit_code = kOk;
  res.output = is_json(c) ? out.dump(2) + "\n" : os.str();
  return res;
}

// graph route for rational singularities, trace route otherwise
NGVerdict scan_verdict(const DemazurePair& pair, long cap) {
  if (pair.curve()->kind() == CurveKind::ProjectiveLine && pair.ample()) {
    BoolOrUnknown gor = gorenstein_test(pair);
    ResolutionGraph graph = blow_down(star_graph(normalize(pair.divisor()),
                                                 pair.curve()->genus()));
    NGVerdict v;
    if (graph.empty()) {
      v.kind = NGKind::Gorenstein;
      v.evidence.push_back({"resolution:smooth", "exceptional set contracts away"});
      return v;
    }
    Cycle zf = fundamental_cycle(graph);
    if (cycle_pa(graph, zf) == 0) {
      bool anti_nef = mowy_ng(graph);
      if (gor.known() && *gor)
        v.kind = NGKind::Gorenstein;
      else
        v.kind = anti_nef ? NGKind::NearlyGorensteinNotGorenstein : NGKind::NotNearlyGorenstein;
      v.evidence.push_back({"resolution:anti-nef",
                            std::string("K + Z_f anti-nef: ") + (anti_nef ? "yes" : "no")});
      return v;
    }
  }
  return decide(pair, cap);
}

RunResult cmd_veronese_scan(const RunConfig& c) {
  if (c.input_path.empty()) throw CommandError("command needs --input <file>");
  if (c.from < 1 || c.to < c.from) throw CommandError("need 1 <= --from <= --to");
  Json j = load_json_file(c.input_path);
  RunResult res;
  Json rows = Json::array();
  std::ostringstream os;
  bool any_unknown = false;
  if (j.contains("preset") || j.contains("custom")) {
    WeightedHypersurface ring = parse_ring_preset(j);
    for (long d = c.from; d <= c.to; ++d) {
      NGVerdict v = veronese_ng(ring, d, c.cap);
      any_unknown |= v.kind == NGKind::Unknown;
      rows.push_back({{"d", d}, {"ng", verdict_to_json(v)}});
      os << "d=" << d << "  " << ng_kind_str(v.kind) << "\n";
    }
  } else {
    QDivisor dv = parse_divisor_input(j);
    DemazurePair base = DemazurePair::make_unchecked(std::move(dv));
    for (long d = c.from; d <= c.to; ++d) {
      DemazurePair pair = veronese(base, d);
      NGVerdict v = scan_verdict(pair, c.cap);
      any_unknown |= v.kind == NGKind::Unknown;
      rows.push_back({{"d", d}, {"ng", verdict_to_json(v)}});
      os << "d=" << d << "  " << ng_kind_str(v.kind) << "\n";
    }
  }
  res.exit_code = any_unknown ? kUnknown : kOk;
  res.output = is_json(c) ? rows.dump(2) + "\n" : os.str();
  return res;
}

RunResult cmd_cone(const RunConfig& c) {
  if (c.input_path.empty()) throw CommandError("command needs --input <file>");
  SymbolicConeInput input = parse_cone_input(load_json_file(c.input_path));
  RunResult res;
  if (c.subcommand == "classify") {
    RuleVerdict v = classify_cone(input);
    res.exit_code = verdict_code(v.kind);
    if (is_json(c)) {
      res.output = rule_verdict_to_json(v).dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "verdict " << rule_kind_str(v.kind) << "  [" << v.rule_id << "]\n";
      for (const auto& p : v.preconditions_used) os << "  uses " << p << "\n";
      if (!v.detail.empty()) os << "  " << v.detail << "\n";
      res.output = os.str();
    }
    return res;
  }
  if (c.subcommand == "almost") {
    RuleVerdict v = almost_gorenstein_g2(input);
    res.exit_code = verdict_code(v.kind);
    res.output = is_json(c) ? rule_verdict_to_json(v).dump(2) + "\n"
                            : rule_kind_str(v.kind) + "  [" + v.rule_id + "]\n";
    return res;
  }
  if (c.subcommand == "compare") {
    ComparisonReport r = compare_ng_ag_g2(input);
    res.exit_code = r.category == "unknown" ? kUnknown : kOk;
    if (is_json(c)) {
      res.output = comparison_to_json(r).dump(2) + "\n";
    } else {
      std::ostringstream os;
      os << "ng " << rule_kind_str(r.ng.kind) << ", ag " << rule_kind_str(r.ag.kind)
         << " => " << r.category;
      if (!r.case_id.empty()) os << " (" << r.case_id << ")";
      os << "\n";
      res.output = os.str();
    }
    return res;
  }
  throw CommandError("cone subcommand must be classify, almost or compare");
}

RunResult cmd_reproduce(const RunConfig& c) {
  const std::string& id = c.subcommand;
  RunResult res;
  std::ostringstream os;
  Json out;
  if (id == "e8-list") {
    auto rows = tables::e8_list();
    std::vector<long> ng;
    Json jr = Json::array();
    for (const auto& r : rows) {
      if (r.ng) ng.push_back(r.d);
      jr.push_back({{"d", r.d}, {"ng", r.ng}});
    }
    os << "nearly Gorenstein Veronese degrees coprime to 30: {";
    for (size_t i = 0; i < ng.size(); ++i) os << (i ? ", " : "") << ng[i];
    os << "}\n";
    out = jr;
  } else if (id.rfind("hyperelliptic-g", 0) == 0) {
    long genus = std::stol(id.substr(15));
    auto rows = tables::hyperelliptic_table(genus);
    Json jr = Json::array();
    for (const auto& r : rows) {
      jr.push_back({{"d", r.d}, {"verdict", ng_kind_str(r.verdict)}});
      os << "d=" << r.d << "  " << ng_kind_str(r.verdict) << "\n";
    }
    out = jr;
  } else if (id == "family-r-p-q") {
    auto rows = tables::family_grid();
    Json jr = Json::array();
    for (const auto& r : rows) {
      os << "r=" << r.r << " p/q=" << rat_str(r.pq) << "  type="
         << (r.type.known() ? sing_type_str(*r.type) : "unknown") << "  a=" << render_nat(r.a)
         << "  pg=" << render_nat(r.pg) << "  m=" << render_nat(r.m)
         << "  gorenstein=" << render_bool(r.gorenstein) << "  ng=" << ng_kind_str(r.ng.kind)
         << "\n";
      Json row{{"r", r.r},
               {"pq", rat_str(r.pq)},
               {"a", nat_to_json(r.a)},
               {"pg", nat_to_json(r.pg)},
               {"m", nat_to_json(r.m)},
               {"gorenstein", bool_to_json(r.gorenstein)},
               {"ng", ng_kind_str(r.ng.kind)}};
      row["type"] = r.type.known() ? Json(sing_type_str(*r.type))
                                   : Json{{"unknown", r.type.reason()}};
      jr.push_back(row);
    }
    out = jr;
  } else if (id == "genus2-classification" || id == "genus3-classification") {
    auto fixtures = id[5] == '2' ? tables::genus2_fixtures() : tables::genus3_fixtures();
    Json jr = Json::array();
    for (const auto& f : fixtures) {
      RuleVerdict v = classify_cone(f.input);
      os << f.name << "  " << rule_kind_str(v.kind) << "  [" << v.rule_id << "]\n";
      jr.push_back({{"fixture", f.name},
                    {"verdict", rule_kind_str(v.kind)},
                    {"rule", v.rule_id},
                    {"expected", rule_kind_str(f.expected)}});
    }
    out = jr;
  } else {
    throw CommandError(
        "unknown table id; use e8-list, hyperelliptic-g2..g5, family-r-p-q, "
        "genus2-classification or genus3-classification");
  }
  res.exit_code = kOk;
  res.output = is_json(c) ? out.dump(2) + "\n" : os.str();
  return res;
}

}  // namespace

RunResult run(const RunConfig& config) {
  try {
    if (config.cap < 0 || config.graph_cap < 0)
      throw CommandError("caps must be positive");
    if (config.command == "analyze") return cmd_analyze(config);
    if (config.command == "ng") return cmd_ng(config);
    if (config.command == "resolve") return cmd_resolve(config);
    if (config.command == "veronese-scan") return cmd_veronese_scan(config);
    if (config.command == "cone") return cmd_cone(config);
    if (config.command == "reproduce") return cmd_reproduce(config);
    throw CommandError("unknown command \"" + config.command + "\"");
  } catch (const SchemaError& e) {
    return RunResult{kError, std::string("schema error: ") + e.what() + "\n"};
  } catch (const std::invalid_argument& e) {
    return RunResult{kError, std::string("invalid input: ") + e.what() + "\n"};
  } catch (const CommandError& e) {
    return RunResult{kError, std::string("error: ") + e.what() + "\n"};
  }
}

}  // namespace ngring

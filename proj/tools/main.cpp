#include <CLI11.hpp>

#include <cstdio>

#include "ngring/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"invariants and nearly-Gorenstein classification of 2-dimensional normal graded rings"};
  app.require_subcommand(1);

  ngring::RunConfig cfg;
  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    auto* opt = cmd->add_option("--input", cfg.input_path, "input JSON file");
    if (needs_input) opt->required();
    cmd->add_option("--cap", cfg.cap, "degree bound for trace computations");
    cmd->add_option("--graph-cap", cfg.graph_cap, "vertex-count guard for graphs");
    cmd->add_option("--format", cfg.format, "table or json")->check(CLI::IsMember({"table", "json"}));
    cmd->add_option("--seed", cfg.seed, "seed for randomized spot checks");
  };

  add_common(app.add_subcommand("analyze", "invariants and the full profile of a Demazure pair"),
             true);
  add_common(app.add_subcommand("ng", "nearly-Gorenstein verdict with evidence"), true);
  add_common(app.add_subcommand("resolve", "star resolution graph, Z_f, p_a"), true);
  auto* scan = app.add_subcommand("veronese-scan", "verdicts for Veronese subrings d = from..to");
  add_common(scan, true);
  scan->add_option("--from", cfg.from, "first Veronese index")->required();
  scan->add_option("--to", cfg.to, "last Veronese index")->required();

  auto* cone = app.add_subcommand("cone", "cone-singularity rule engine");
  cone->require_subcommand(1);
  add_common(cone->add_subcommand("classify", "nearly-Gorenstein classification"), true);
  add_common(cone->add_subcommand("almost", "genus-2 almost-Gorenstein table"), true);
  add_common(cone->add_subcommand("compare", "genus-2 nearly vs almost comparison"), true);

  auto* rep = app.add_subcommand("reproduce", "regenerate a named classification table");
  std::string table_id;
  rep->add_option("table", table_id,
                  "e8-list | hyperelliptic-g2..g5 | family-r-p-q | genus2-classification | "
                  "genus3-classification")
      ->required();
  add_common(rep, false);

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  if (cfg.command == "cone") {
    cfg.subcommand = sub->get_subcommands().front()->get_name();
  } else if (cfg.command == "reproduce") {
    cfg.subcommand = table_id;
  }

  ngring::RunResult res = ngring::run(cfg);
  std::fputs(res.output.c_str(), res.exit_code == 1 ? stderr : stdout);
  return res.exit_code;
}

#pragma once

#include <string>

namespace ngring {

// Parsed command line.  Exit codes: 0 success, 2 honest Unknown verdicts,
// 1 errors (schema violations, inconsistent flags, bad arguments).
struct RunConfig {
  std::string command;     // analyze | resolve | ng | veronese-scan | cone | reproduce
  std::string subcommand;  // cone: classify | almost | compare;  reproduce: table id
  std::string input_path;
  long cap = 0;        // degree bound for trace decisions (0 = default)
  long graph_cap = 0;  // vertex-count guard for resolution graphs (0 = default)
  std::string format = "table";  // table | json
  long from = 1;
  long to = 1;
  unsigned long seed = 0;  // reserved for randomized spot checks
};

struct RunResult {
  int exit_code = 0;
  std::string output;
};

RunResult run(const RunConfig& config);

}  // namespace ngring

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zf {

struct RunConfig {
  std::string subcommand;
  std::string graph_path;
  std::string decomposition_path;
  std::string certificate_path;
  std::string out_path;
  bool exact_pw = false;
  std::uint64_t seed = 0;
  int budget = -1;  // -1: oracle defaults
  std::vector<std::string> families;
  int max_n = 2048;
};

// Exit codes: 0 success; 1 failed verification claims; 2 parse or usage
// error; 3 invalid decomposition; 4 internal verification failure;
// 5 oracle budget exceeded.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace zf

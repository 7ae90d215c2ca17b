#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bmw/perm_group.hpp"

namespace bmw {

enum ExitCode : int { kExitOk = 0, kExitBadInput = 1, kExitCapExceeded = 2, kExitVerificationFailed = 3 };

enum class OutputFormat { Text, Json };

struct RunConfig {
  std::string command;               // analyze, verdict, tables, search, verify
  std::vector<std::string> inputs;
  OutputFormat format = OutputFormat::Text;
  Limits limits;
  unsigned threads = 1;
};

// Caps from BMW_ENUM_CAP and BMW_GRAPH_CAP when set. Throws ParseError on a
// value that is not a positive integer.
Limits limits_from_environment(Limits base = {});

// The command line without the program name. Messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bmw

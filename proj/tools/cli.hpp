#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace digalph::cli {

enum ExitCode : int {
  kSuccess = 0,
  kCorpusFailures = 1,
  kUsageError = 2,
  kInputError = 3,
};

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  // Environment lookup; defaults to std::getenv.
  std::function<std::optional<std::string>(const std::string&)> getenv;
};

// args excludes the program name.
int run(const std::vector<std::string>& args, Io io);

}  // namespace digalph::cli

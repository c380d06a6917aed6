#pragma once

#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace gwb::cli {

using json = nlohmann::json;

inline constexpr const char* kVersion = "0.3.0";

/// One option of a verb. Values are recorded in reports with their type so a
/// replay can rebuild the command line.
struct OptionSpec {
  enum class Type { Int, Real, Text, Flag };
  std::string name;
  Type type = Type::Text;
  std::string fallback;
  std::string help;
};

struct Outcome {
  std::string status;
  /// Bounded evidence only (RotundUpTo, FreeUpTo, ...).
  bool bounded = false;
  json verdict;
};

struct Context {
  std::vector<std::string> paths;
  std::vector<json> documents;
  /// Effective typed option values, keyed by option name.
  json options;
};

struct VerbSpec {
  std::string name;
  std::string help;
  std::vector<std::string> inputs;
  std::vector<OptionSpec> options;
  std::function<Outcome(const Context&)> run;
};

const std::vector<VerbSpec>& verbs();

/// Parses argv (without the program name), writes one JSON document to `out`
/// and diagnostics to `err`. Exit codes: 0 definite verdict, 1 error, 2
/// bounded evidence under --strict.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Default working precision: GWB_PRECISION or 64 digits.
int default_precision();

}  // namespace gwb::cli

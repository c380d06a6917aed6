#include "gwb/cli/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <map>
#include <ostream>

#include <CLI11.hpp>
#include <Eigen/Core>
#include <gmp.h>
#include <mpfr.h>
#include <openssl/crypto.h>

#include "gwb/error.hpp"
#include "gwb/io/json_io.hpp"
#include "verbs.hpp"

namespace gwb::cli {

int default_precision() {
  if (const char* env = std::getenv("GWB_PRECISION")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 4 && v <= 150) return static_cast<int>(v);
  }
  return 64;
}

namespace {

using Type = OptionSpec::Type;

const std::vector<OptionSpec>& common_options() {
  static const std::vector<OptionSpec> opts = {
      {"strict", Type::Flag, "", "exit 2 on bounded-evidence verdicts"},
      {"threads", Type::Int, "0", "cap on worker threads (0: runtime default)"},
  };
  return opts;
}

json versions() {
  return {{"gwb", kVersion},
          {"gmp", gmp_version},
          {"mpfr", mpfr_get_version()},
          {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                        std::to_string(EIGEN_MINOR_VERSION)},
          {"openssl", OpenSSL_version(OPENSSL_VERSION)}};
}

json typed_value(const OptionSpec& o, const std::string& text) {
  try {
    std::size_t used = 0;
    switch (o.type) {
      case Type::Int: {
        long v = std::stol(text, &used);
        if (used == text.size()) return v;
        break;
      }
      case Type::Real: {
        double v = std::stod(text, &used);
        if (used == text.size()) return v;
        break;
      }
      case Type::Text: return text;
      case Type::Flag: return text == "true";
    }
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::InvalidArgument, "bad value \"" + text + "\" for --" + o.name);
}

std::string option_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_float()) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  return v.dump();
}

struct Parsed {
  const VerbSpec* verb = nullptr;
  std::vector<std::string> inputs;
  json options;
  bool help = false;
  std::string help_text;
};

Parsed parse_command(const std::vector<std::string>& args) {
  if (args.empty()) throw Error(ErrorCode::UnknownVerb, "no verb given");
  Parsed p;
  const auto& all = verbs();
  auto it = std::find_if(all.begin(), all.end(), [&](const VerbSpec& v) { return v.name == args[0]; });
  if (it == all.end()) throw Error(ErrorCode::UnknownVerb, "unknown verb \"" + args[0] + "\"");
  p.verb = &*it;

  CLI::App app(it->help, "gwb " + it->name);
  app.add_option("inputs", p.inputs, "input files")->expected(static_cast<int>(it->inputs.size()))->required();
  std::vector<OptionSpec> specs = it->options;
  specs.insert(specs.end(), common_options().begin(), common_options().end());
  std::map<std::string, std::string> texts;
  std::map<std::string, bool> flags;
  for (const auto& o : specs) {
    if (o.type == Type::Flag) {
      flags[o.name] = false;
      app.add_flag("--" + o.name, flags[o.name], o.help);
    } else {
      texts[o.name] = o.fallback;
      app.add_option("--" + o.name, texts[o.name], o.help)->capture_default_str();
    }
  }
  std::vector<std::string> rest(args.begin() + 1, args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    p.help = true;
    p.help_text = app.help();
    return p;
  } catch (const CLI::ParseError& e) {
    throw Error(ErrorCode::InvalidArgument, e.what());
  }
  p.options = json::object();
  for (const auto& o : specs)
    p.options[o.name] = o.type == Type::Flag ? json(flags[o.name]) : typed_value(o, texts[o.name]);
  return p;
}

json error_document(const std::string& verb, const Error& e) {
  return {{"verb", verb},
          {"error", {{"code", std::string(to_string(e.code()))}, {"message", e.what()}}},
          {"versions", versions()}};
}

struct Execution {
  json report;
  int exit_code = 0;
};

Execution execute(const Parsed& p) {
  Context ctx;
  json inputs = json::array();
  for (const auto& path : p.inputs) {
    std::string text = io::read_file(path);
    inputs.push_back({{"path", path}, {"sha256", io::sha256_hex(text)}});
    ctx.paths.push_back(path);
    ctx.documents.push_back(io::parse_json_text(text, path));
  }
  ctx.options = p.options;
  if (long t = p.options["threads"].get<long>(); t > 0) omp_set_num_threads(static_cast<int>(t));

  auto t0 = std::chrono::steady_clock::now();
  Outcome outcome = p.verb->run(ctx);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  Execution ex;
  ex.report = {{"verb", p.verb->name},
               {"inputs", inputs},
               {"options", p.options},
               {"status", outcome.status},
               {"evidence", outcome.bounded ? "bounded" : "definite"},
               {"verdict", outcome.verdict},
               {"versions", versions()},
               {"wall_time_s", secs}};
  ex.exit_code = outcome.bounded && p.options["strict"].get<bool>() ? 2 : 0;
  return ex;
}

}  // namespace

// The verdict of the re-run must match byte for byte.
Outcome replay(const Context& ctx) {
  const json& rep = ctx.documents.at(0);
  if (!rep.contains("verb") || !rep.contains("options") || !rep.contains("inputs") || !rep.contains("verdict"))
    throw Error(ErrorCode::ParseError, ctx.paths[0] + ": not a report");
  std::vector<std::string> args{rep["verb"].get<std::string>()};
  bool digests = true;
  for (const auto& in : rep["inputs"]) {
    const auto path = in["path"].get<std::string>();
    args.push_back(path);
    if (io::sha256_hex(io::read_file(path)) != in["sha256"].get<std::string>()) digests = false;
  }
  for (const auto& [key, val] : rep["options"].items()) {
    if (val.is_boolean()) {
      if (val.get<bool>()) args.push_back("--" + key);
    } else {
      args.push_back("--" + key);
      args.push_back(option_text(val));
    }
  }
  Parsed p = parse_command(args);
  if (p.verb->name == "replay") throw Error(ErrorCode::InvalidArgument, "cannot replay a replay");
  Execution ex = execute(p);
  const bool same = io::canonical_dump(ex.report["verdict"]) == io::canonical_dump(rep["verdict"]) &&
                    ex.report["status"] == rep["status"];
  Outcome o;
  o.status = same && digests ? "Reproduced" : "Diverged";
  o.verdict = {{"verb", rep["verb"]},
               {"digests_match", digests},
               {"reproduced", same},
               {"status", ex.report["status"]}};
  return o;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  if (!args.empty() && (args[0] == "--help" || args[0] == "-h" || args[0] == "help")) {
    out << "usage: gwb <verb> [inputs] [options]\n\nverbs:\n";
    for (const auto& v : verbs()) out << "  " << v.name << std::string(16 - std::min<std::size_t>(15, v.name.size()), ' ') << v.help << "\n";
    return 0;
  }
  if (!args.empty() && args[0] == "--version") {
    out << "gwb " << kVersion << "\n";
    return 0;
  }
  const std::string verb = args.empty() ? "" : args[0];
  try {
    Parsed p = parse_command(args);
    if (p.help) {
      out << p.help_text;
      return 0;
    }
    Execution ex = execute(p);
    if (verb == "replay" && !ex.report["verdict"]["reproduced"].get<bool>()) ex.exit_code = 1;
    if (verb == "replay" && !ex.report["verdict"]["digests_match"].get<bool>()) ex.exit_code = 1;
    out << io::canonical_dump(ex.report);
    return ex.exit_code;
  } catch (const Error& e) {
    err << "gwb: " << e.what() << "\n";
    out << io::canonical_dump(error_document(verb, e));
    return 1;
  } catch (const std::exception& e) {
    Error wrapped(ErrorCode::InvalidArgument, e.what());
    err << "gwb: " << wrapped.what() << "\n";
    out << io::canonical_dump(error_document(verb, wrapped));
    return 1;
  }
}

}  // namespace gwb::cli

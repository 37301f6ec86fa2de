// symrange command line: evaluation, norm and optimal-range queries, property suites.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "symrange/errors.hpp"
#include "symrange/io.hpp"
#include "symrange/norms.hpp"
#include "symrange/operators.hpp"
#include "symrange/optrange.hpp"
#include "symrange/rearrangement.hpp"
#include "symrange/suites.hpp"

namespace {

using namespace symrange;
using nlohmann::ordered_json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  Index window = 65536;
  std::string out;
  std::string format;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// "--out csv" and "--out json" select a format and keep stdout.
std::string resolve_format(Globals& g, const char* fallback) {
  if (g.format.empty() && (g.out == "csv" || g.out == "json")) {
    g.format = g.out;
    g.out.clear();
  }
  if (g.format.empty()) g.format = fallback;
  if (g.format != "csv" && g.format != "json") throw UsageError("--format must be csv or json");
  return g.format;
}

void write(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open '" + g.out + "' for writing");
  f << text;
  if (!f.flush()) throw std::runtime_error("write to '" + g.out + "' failed");
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

template <class T>
std::string csv_of(const T& v) {
  std::ostringstream os;
  emit_csv(v, os);
  return os.str();
}

void require_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw UsageError("no such input file '" + path + "'");
}

Sequence load_sequence(const std::string& path) {
  require_file(path);
  return sequence_from_json(read_json_file(path));
}

SpaceSpec load_space(const std::string& arg) {
  // Either a file or an inline JSON document.
  if (!arg.empty() && arg.front() == '{') {
    try {
      return space_from_json(nlohmann::json::parse(arg));
    } catch (const nlohmann::json::parse_error& e) {
      throw FormatError(std::string("inline space is not valid JSON: ") + e.what());
    }
  }
  require_file(arg);
  return space_from_json(read_json_file(arg));
}

int report_exit(const Globals& g, VerificationReport& report) {
  report.environment["seed"] = g.seed;
  report.environment["window"] = g.window;
  write(g, g.format == "json" ? dump(to_json(report)) : csv_of(report));
  std::fprintf(stderr, "%s: %zu pass, %zu fail, %zu inconclusive\n", report.suite.c_str(), report.count(Status::Pass),
               report.count(Status::Fail), report.count(Status::Inconclusive));
  return report.passed() ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"symrange: Calderon operator, discrete Hilbert transform and optimal symmetric ranges"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random family");
  app.add_option("--window", g.window, "Window length / explicit-term budget")->check(CLI::Range(Index{16}, Index{1} << 27));
  app.add_option("--out", g.out, "Output path (stdout when absent)");
  app.add_option("--format", g.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  std::string in, space_arg, grid = "default", method = "fast", suite, sizes_arg = "4096,65536";
  std::optional<Index> lo, hi;
  int trials = 0;

  auto* rearrange = app.add_subcommand("rearrange", "Decreasing rearrangement mu(x)");
  rearrange->add_option("--in", in, "Sequence JSON")->required();

  auto* norm_cmd = app.add_subcommand("norm", "Quasi-norm of x in a symmetric space");
  norm_cmd->add_option("--in", in, "Sequence JSON")->required();
  norm_cmd->add_option("--space", space_arg, "Space JSON file or inline document")->required();

  auto* calderon_cmd = app.add_subcommand("calderon", "Calderon operator on [0, window)");
  calderon_cmd->add_option("--in", in, "Sequence JSON")->required();

  auto* hilbert_cmd = app.add_subcommand("hilbert", "Discrete Hilbert transform on [lo, hi]");
  hilbert_cmd->add_option("--in", in, "Sequence JSON")->required();
  hilbert_cmd->add_option("--lo", lo, "First output index (default -window)");
  hilbert_cmd->add_option("--hi", hi, "Last output index (default window)");
  hilbert_cmd->add_option("--method", method, "naive or fast")->check(CLI::IsMember({"naive", "fast"}));

  auto* opt = app.add_subcommand("optrange", "Optimal range space F");
  opt->require_subcommand(1);
  auto* fnorm = opt->add_subcommand("fnorm", "Upper estimate of ||x||_F with a verified witness");
  fnorm->add_option("--in", in, "Sequence JSON")->required();
  fnorm->add_option("--space", space_arg, "Domain space E")->required();
  fnorm->add_option("--grid", grid, "default, fine or coarse")->check(CLI::IsMember({"default", "fine", "coarse"}));
  auto* member = opt->add_subcommand("member-weakl1", "Membership in the optimal range of weak-l1");
  member->add_option("--in", in, "Sequence JSON")->required();
  auto* opt_verify = opt->add_subcommand("verify", "Optimal-range property suites");
  opt_verify->add_option("--suite", suite, "quasitriangle, minimality or hilbert")
      ->required()
      ->check(CLI::IsMember({"quasitriangle", "minimality", "hilbert"}));
  opt_verify->add_option("--trials", trials, "Trial count (0 keeps defaults)")->check(CLI::NonNegativeNumber);
  opt_verify->add_option("--space", space_arg, "Domain space E (default weak_l1)");

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("--suite", suite, "core, norms, operators, optrange or all")->required();
  verify->add_option("--trials", trials, "Trial count (0 keeps defaults)")->check(CLI::NonNegativeNumber);

  auto* bench = app.add_subcommand("bench", "Naive vs fast Hilbert timings");
  bench->add_option("--sizes", sizes_arg, "Comma-separated support sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  }

  try {
    if (*rearrange) {
      resolve_format(g, "csv");
      const auto mu = decreasing_rearrangement(load_sequence(in), g.window);
      if (g.format == "json") {
        ordered_json j;
        j["values"] = ordered_json::array();
        for (double v : mu.values()) j["values"].push_back(json_number(v));
        j["tail"] = mu.tail() ? to_json(Sequence::power_log(mu.tail()->alpha, mu.tail()->beta, mu.tail()->scale))
                              : ordered_json();
        write(g, dump(j));
      } else {
        std::string s = "index,value\n";
        for (Index n = 0; n < mu.size(); ++n) s += std::to_string(n) + "," + format_double(mu(n)) + "\n";
        write(g, s);
      }
      return kPass;
    }
    if (*norm_cmd) {
      resolve_format(g, "json");
      const auto space = load_space(space_arg);
      const auto v = norm(load_sequence(in), space, g.window);
      if (g.format == "json") {
        auto j = to_json(v);
        j["space"] = space.name();
        write(g, dump(j));
      } else {
        write(g, "space,value,tail_halfwidth,window\n" + space.name() + "," + format_double(v.value) + "," +
                     format_double(v.tail_halfwidth) + "," + std::to_string(v.window) + "\n");
      }
      return kPass;
    }
    if (*calderon_cmd) {
      resolve_format(g, "csv");
      const auto s = calderon(load_sequence(in), g.window);
      write(g, g.format == "json" ? dump(to_json(s)) : csv_of(s));
      return kPass;
    }
    if (*hilbert_cmd) {
      resolve_format(g, "csv");
      const Index a = lo.value_or(-g.window), b = hi.value_or(g.window);
      if (a > b) throw UsageError("--lo must not exceed --hi");
      const auto h = hilbert(load_sequence(in), a, b, method == "naive" ? EvalMethod::Naive : EvalMethod::FastConvolution);
      write(g, g.format == "json" ? dump(to_json(h)) : csv_of(h));
      return kPass;
    }
    if (*fnorm) {
      resolve_format(g, "json");
      GridConfig cfg = GridConfig::named(grid);
      try {
        const auto est = f_norm_upper(load_sequence(in), load_space(space_arg), cfg);
        if (g.format == "json") {
          write(g, dump(to_json(est)));
        } else {
          write(g, "upper,lower,shape,scale,tail_argument,window\n" + format_double(est.upper) + "," +
                       (est.lower ? format_double(*est.lower) : std::string()) + "," + est.shape + "," +
                       format_double(est.scale) + "," + to_string(est.witness.tail_argument) + "," +
                       std::to_string(est.witness.window) + "\n");
        }
        return kPass;
      } catch (const NoWitnessFound& e) {
        std::fprintf(stderr, "inconclusive: %s\n", e.what());
        write(g, g.format == "json" ? dump(ordered_json{{"upper", nullptr}, {"lower", nullptr}, {"witness", nullptr}})
                                    : std::string("upper,lower,shape,scale,tail_argument,window\n"));
        return kFail;
      }
    }
    if (*member) {
      resolve_format(g, "json");
      const auto m = weak_l1_membership(load_sequence(in), g.window);
      if (g.format == "json") {
        write(g, dump(ordered_json{{"member", m.member}, {"c_a", json_number(m.c_a)}}));
      } else {
        write(g, "member,c_a\n" + std::string(m.member ? "true" : "false") + "," + format_double(m.c_a) + "\n");
      }
      return kPass;
    }
    if (*opt_verify) {
      resolve_format(g, "csv");
      const SpaceSpec space = space_arg.empty() ? SpaceSpec::weak_l1() : load_space(space_arg);
      const auto pick = [&](int fallback) { return trials > 0 ? trials : fallback; };
      VerificationReport report;
      if (suite == "quasitriangle") {
        const double c_e = axiom_check(space, pick(2000), g.seed).observed("quasi_triangle_modulus");
        report = verify_f_quasitriangle(space, pick(200), g.seed, c_e);
      } else if (suite == "minimality") {
        report = verify_minimality(space, minimality_catalog(), pick(40), g.seed, g.window);
      } else {
        report = verify_hilbert_optimal_range(pick(50), g.seed);
      }
      return report_exit(g, report);
    }
    if (*verify) {
      resolve_format(g, "csv");
      RunConfig cfg;
      cfg.seed = g.seed;
      cfg.window = g.window;
      cfg.trials = trials;
      if (!g.out.empty()) cfg.output_dir = std::filesystem::path(g.out).parent_path();
      bool known = false;
      for (const auto& s : suite_names()) known = known || s == suite;
      if (!known) throw UsageError("unknown suite '" + suite + "'");
      auto report = run_suite(suite, cfg);
      return report_exit(g, report);
    }
    if (*bench) {
      resolve_format(g, "csv");
      std::vector<Index> sizes;
      std::stringstream ss(sizes_arg);
      for (std::string tok; std::getline(ss, tok, ',');) {
        try {
          std::size_t used = 0;
          const long long v = std::stoll(tok, &used);
          if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
          sizes.push_back(v);
        } catch (const std::exception&) {
          throw UsageError("--sizes must be positive integers, got '" + tok + "'");
        }
      }
      if (sizes.empty()) throw UsageError("--sizes is empty");
      const auto rows = bench_hilbert(sizes, g.seed);
      auto report = bench_report(rows);
      if (g.format == "json") {
        ordered_json j;
        j["rows"] = ordered_json::array();
        for (const auto& r : rows) {
          j["rows"].push_back({{"size", r.size},
                               {"naive_seconds", json_number(r.naive_seconds)},
                               {"fast_seconds", json_number(r.fast_seconds)},
                               {"speedup", json_number(r.speedup())},
                               {"normwise_deviation", json_number(r.normwise_deviation)},
                               {"pointwise_deviation", json_number(r.pointwise_deviation)}});
        }
        j["report"] = to_json(report);
        write(g, dump(j));
      } else {
        std::string s = "size,naive_seconds,fast_seconds,speedup,normwise_deviation,pointwise_deviation\n";
        for (const auto& r : rows) {
          s += std::to_string(r.size) + "," + format_double(r.naive_seconds) + "," + format_double(r.fast_seconds) +
               "," + format_double(r.speedup()) + "," + format_double(r.normwise_deviation) + "," +
               format_double(r.pointwise_deviation) + "\n";
        }
        write(g, s);
      }
      return report.passed() ? kPass : kFail;
    }
  } catch (const UsageError& e) {
    std::fprintf(stderr, "usage: %s\n", e.what());
    return kUsage;
  } catch (const FormatError& e) {
    std::fprintf(stderr, "input: %s\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "usage: %s\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kFail;
  }
  return kUsage;
}

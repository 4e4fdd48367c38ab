// Command-line harness: verify <suite>, sample, list.
// Exit codes: 0 all checks pass, 1 some check fails, 2 usage or I/O error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cayley/errors.hpp"
#include "cayley/suites.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

bool write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return static_cast<bool>(std::cout);
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerical verification of projective planes over the division algebras"};
  app.require_subcommand(1);

  cayley::SuiteConfig cfg;
  std::optional<int> level;
  std::string format = "json";
  std::string out;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite and emit a report");
  verify->add_option("suite", cfg.suite, "suite name (see list)")->required();
  verify->add_option("--n", level, "restrict to one level 0..3");
  verify->add_option("--samples", cfg.samples, "random samples per level")->check(CLI::PositiveNumber);
  verify->add_option("--seed", cfg.seed, "64-bit seed");
  verify->add_option("--tol-alg", cfg.tol.alg, "tolerance for exact identities")->check(CLI::PositiveNumber);
  verify->add_option("--tol-geo", cfg.tol.geo, "tolerance for flowed and geometric checks")
      ->check(CLI::PositiveNumber);
  verify->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  verify->add_option("--out", out, "write the report here instead of stdout");
  verify->add_flag("--parallel", cfg.parallel, "fan samples out over threads");
  verify->add_flag("--timing", timing, "include wall time (breaks byte-identical reports)");

  std::string kind;
  int sample_level = 0;
  int count = 1;
  std::uint64_t sample_seed = 0;
  std::string sample_out;
  auto* sample = app.add_subcommand("sample", "dump sampled points in the serialized layout");
  sample->add_option("--kind", kind, "plane, complex or infinity")
      ->required()
      ->check(CLI::IsMember({"plane", "complex", "infinity"}));
  sample->add_option("--n", sample_level, "level 0..3")->required()->check(CLI::Range(0, 3));
  sample->add_option("--count", count, "number of points")->check(CLI::PositiveNumber);
  sample->add_option("--seed", sample_seed, "64-bit seed");
  sample->add_option("--out", sample_out, "output path (stdout when omitted)");

  auto* list = app.add_subcommand("list", "list suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitUsage;
  }

  try {
    if (*list) {
      std::cout << cayley::list_suites();
      return 0;
    }
    if (*sample) {
      if (!write_output(sample_out, cayley::sample_dump(kind, sample_level, count, sample_seed))) {
        std::cerr << "error: cannot write " << sample_out << "\n";
        return kExitUsage;
      }
      return 0;
    }
    cfg.n = level;
    const auto start = std::chrono::steady_clock::now();
    cayley::VerificationReport report = cayley::run_suite(cfg);
    if (timing) report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string text = format == "json" ? cayley::format_json(report) : cayley::format_text(report);
    if (!write_output(out, text)) {
      std::cerr << "error: cannot write " << out << "\n";
      return kExitUsage;
    }
    std::cerr << (report.pass() ? "PASS " : "FAIL ") << report.suite << " (" << report.checks.size() << " checks)\n";
    return report.pass() ? 0 : kExitFail;
  } catch (const cayley::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

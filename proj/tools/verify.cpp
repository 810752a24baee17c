// Command-line verification harness.
//
// verify <suite> [options] runs one of the exact check suites and writes an
// optional JSON report. Exit codes: 0 all checks passed, 1 at least one
// check failed, 2 usage or input-data error.

#include "kummer/suites.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace kummer;

void print_suite(const SuiteReport& s) {
  for (const Assertion& a : s.assertions)
    std::printf("[%s] %s: %s\n", status_str(a.status), a.id.c_str(), a.claim.c_str());
}

int run(const std::string& suite, const SuiteOptions& opt, const std::string& keum_path,
        const std::string& output) {
  KeumTable table;
  SuiteOptions o = opt;
  if (!keum_path.empty()) {
    table = parse_keum_table(keum_path);
    SuiteReport gate = suite_keum(&table);
    if (!gate.passed()) {
      print_suite(gate);
      std::fprintf(stderr, "error: external table rejected by the validation gate\n");
      return 2;
    }
    o.keum = &table;
  }

  RunReport run;
  run.suite = suite;
  run.seed = o.seed;
  run.samples = o.samples;
  run.symbolic = o.symbolic;
  run.sweep = o.sweep;
  if (o.keum) run.keum_digest = o.keum->digest;

  auto want = [&](const char* name) { return suite == name || suite == "all"; };
  if (want("config")) run.suites.push_back(suite_config());
  if (want("lattice")) run.suites.push_back(suite_lattice());
  if (want("isometry")) run.suites.push_back(suite_isometry());
  if (want("threefold")) run.suites.push_back(suite_threefold());
  if (want("chamber")) run.suites.push_back(suite_chamber(o));
  if (want("cremona")) run.suites.push_back(suite_cremona(o));
  if (suite == "all") run.suites.push_back(suite_keum(o.keum));

  for (const SuiteReport& s : run.suites) print_suite(s);
  if (!output.empty()) run.write(output);

  std::size_t fails = 0, skips = 0, passes = 0;
  for (const SuiteReport& s : run.suites) {
    fails += s.count(Status::FAIL);
    skips += s.count(Status::SKIPPED);
    passes += s.count(Status::PASS);
  }
  std::printf("%zu passed, %zu failed, %zu skipped\n", passes, fails, skips);
  return fails == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification of the Kummer configuration, its lattices and the quintic "
               "Cremona involutions"};
  app.require_subcommand(1);

  std::string keum_path, output, sweep = "representatives";
  std::uint64_t seed = 7;
  std::size_t samples = 5;
  bool symbolic = false;

  app.add_option("--seed", seed, "seed for sampled checks");
  app.add_option("--samples", samples, "number of moduli specializations");
  app.add_flag("--symbolic", symbolic, "also run the Cremona checks over Q(a, b, c)");
  app.add_option("--keum_file", keum_path, "JSON table of external hexad action matrices");
  app.add_option("--sweep", sweep, "face sweep extent")
      ->check(CLI::IsMember({"representatives", "full"}));
  app.add_option("--output", output, "path for the JSON report");

  std::vector<std::string> names = {"config",  "lattice", "isometry", "threefold",
                                    "chamber", "cremona", "all"};
  for (const std::string& n : names)
    app.add_subcommand(n, "run the " + (n == "all" ? "full suite" : n + " suite"))
        ->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, usage errors exit 2
  }

  std::string suite = app.get_subcommands().front()->get_name();
  kummer::SuiteOptions opt;
  opt.seed = seed;
  opt.samples = samples;
  opt.symbolic = symbolic;
  opt.sweep = sweep;

  try {
    return run(suite, opt, keum_path, output);
  } catch (const kummer::KeumParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
}

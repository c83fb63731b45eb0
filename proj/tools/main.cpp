// lpnreach: explicit-state reachability for labeled Petri net systems.
//
// Loads a model (from a file or a built-in generator family), runs the
// depth-first search against the selected state store backend, and prints
// one report per run. --compare re-runs the same model on additional
// backends and fails if any two completed runs disagree on the state count.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lpnreach/errors.hpp"
#include "lpnreach/generators.hpp"
#include "lpnreach/model_parser.hpp"
#include "lpnreach/reach.hpp"
#include "lpnreach/report.hpp"
#include "lpnreach/store.hpp"

namespace {

// Exit codes. Keep these stable: scripts key on them.
enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kTimeout = 2,
  kStateCap = 3,
  kParseError = 4,
  kModelError = 5,
  kCompareMismatch = 6,
};

struct RunOutcome {
  lpnreach::RunReport report;
  std::string store_dump;  // filled only when requested
};

RunOutcome run_backend(const lpnreach::LpnSystem& sys, const std::string& model_name,
                       const std::string& backend, std::uint64_t threshold,
                       const lpnreach::ReachLimits& limits, bool want_dump) {
  lpnreach::StateTables tables(sys);
  auto store =
      lpnreach::make_store(backend, static_cast<std::uint32_t>(sys.module_count()), threshold);
  RunOutcome out;
  out.report.model = model_name;
  out.report.threshold = threshold;
  out.report.reach = lpnreach::dfs_reach(tables, *store, limits);
  if (want_dump) out.store_dump = store->dump();
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit-state reachability over labeled Petri net systems"};

  std::string model_path;
  std::string family;
  std::uint32_t family_n = 0;
  std::string backend = "hash";
  std::uint64_t threshold = 65536;
  double time_limit = 900.0;
  std::uint64_t max_states = 0;
  std::string format = "text";
  std::vector<std::string> compare_kinds;
  std::string dump_path;

  const std::vector<std::string> kBackends = {"hash", "mdt", "mdd", "hybrid"};

  auto* model_opt =
      app.add_option("--model", model_path, "model file to analyze");
  auto* gen_opt = app.add_option(
      "--generate", family,
      "built-in family: toggle_chain, philosophers, ring_arbiter");
  auto* n_opt =
      app.add_option("--n", family_n, "size parameter for --generate");
  model_opt->excludes(gen_opt);
  gen_opt->excludes(model_opt);
  gen_opt->needs(n_opt);
  n_opt->needs(gen_opt);

  app.add_option("--backend", backend, "state store backend")
      ->check(CLI::IsMember(kBackends));
  app.add_option("--threshold", threshold,
                 "hybrid flush threshold in buffered states")
      ->check(CLI::PositiveNumber);
  app.add_option("--time-limit", time_limit,
                 "wall-clock budget in seconds; <= 0 disables");
  app.add_option("--max-states", max_states,
                 "stop after storing this many states; 0 = unlimited");
  app.add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--compare", compare_kinds,
                 "comma-separated extra backends to cross-check")
      ->delimiter(',')
      ->check(CLI::IsMember(kBackends));
  app.add_option("--dump-store", dump_path,
                 "write the primary backend's final store rendering here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  if (model_path.empty() == family.empty()) {
    std::cerr << "error: exactly one of --model and --generate is required\n";
    return kUsage;
  }

  lpnreach::LpnSystem sys;
  std::string model_name;
  try {
    if (!model_path.empty()) {
      sys = lpnreach::load_model_file(model_path);
      model_name = std::filesystem::path(model_path).stem().string();
    } else {
      sys = lpnreach::generate_model(family, family_n);
      model_name = family + "_" + std::to_string(family_n);
    }
  } catch (const lpnreach::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParseError;
  } catch (const lpnreach::ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kModelError;
  }

  lpnreach::ReachLimits limits;
  limits.time_limit_seconds = time_limit;
  limits.max_states = max_states;

  std::vector<std::string> kinds = {backend};
  for (const auto& k : compare_kinds) kinds.push_back(k);

  std::vector<lpnreach::RunReport> reports;
  std::string primary_dump;
  try {
    for (std::size_t i = 0; i < kinds.size(); ++i) {
      bool want_dump = i == 0 && !dump_path.empty();
      RunOutcome out =
          run_backend(sys, model_name, kinds[i], threshold, limits, want_dump);
      if (want_dump) primary_dump = std::move(out.store_dump);
      reports.push_back(std::move(out.report));
    }
  } catch (const lpnreach::EvalError& e) {
    // A guard or assignment failed at runtime; the model is at fault.
    std::cerr << "model error: " << e.what() << "\n";
    return kModelError;
  } catch (const lpnreach::ModelError& e) {
    std::cerr << "model error: " << e.what() << "\n";
    return kModelError;
  }

  if (!dump_path.empty()) {
    std::ofstream f(dump_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot write " << dump_path << "\n";
      return kUsage;
    }
    f << primary_dump;
  }

  if (format == "json") {
    if (reports.size() == 1) {
      std::cout << lpnreach::to_json(reports[0]);
    } else {
      std::cout << lpnreach::to_json_array(reports);
    }
  } else if (format == "csv") {
    std::cout << lpnreach::csv_header();
    for (const auto& r : reports) std::cout << lpnreach::to_csv_row(r);
  } else {
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (i != 0) std::cout << "\n";
      std::cout << lpnreach::to_text(reports[i]);
    }
  }

  if (kinds.size() > 1) {
    // Only completed runs have authoritative state counts.
    bool have = false;
    std::uint64_t expect = 0;
    for (const auto& r : reports) {
      if (r.reach.termination != lpnreach::Termination::kCompleted) continue;
      if (!have) {
        have = true;
        expect = r.reach.states;
      } else if (r.reach.states != expect) {
        std::cerr << "compare mismatch: backends disagree on state count\n";
        return kCompareMismatch;
      }
    }
  }

  switch (reports[0].reach.termination) {
    case lpnreach::Termination::kTimeout:
      return kTimeout;
    case lpnreach::Termination::kStateCap:
      return kStateCap;
    case lpnreach::Termination::kCompleted:
      break;
  }
  return kOk;
}

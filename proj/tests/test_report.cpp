// Serialization checks: JSON and CSV must carry identical, round-trippable
// values, and the two derived rates must equal what the raw fields give.

#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "lpnreach/report.hpp"

using lpnreach::RunReport;
using lpnreach::Termination;

namespace {

RunReport sample_report(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  RunReport r;
  r.model = "sample_" + std::to_string(seed);
  r.threshold = 1 + rng() % 100000;
  auto& re = r.reach;
  re.backend = (seed % 2) ? "hybrid" : "mdd";
  re.states = 1 + rng() % 3000000;
  re.firings = re.states * (1 + rng() % 9);
  re.elapsed_seconds = std::ldexp(double(1 + rng() % (1u << 30)), -34);
  re.termination = Termination::kCompleted;
  re.store.kind = re.backend;
  re.store.entries = rng() % 100;
  re.store.nodes = rng() % 100000;
  re.store.edges = re.store.nodes * 2;
  re.store.estimated_bytes = 48 * re.store.nodes + 8 * re.store.edges;
  re.store.peak_estimated_bytes = re.store.estimated_bytes + rng() % 1000000;
  re.store.flushes = rng() % 40;
  re.store.unions = re.store.flushes;
  re.interned_local_states = rng() % 5000;
  re.interned_bytes = re.interned_local_states * 24;
  re.states_per_second =
      double(re.states) / std::max(re.elapsed_seconds, 1e-9);
  re.states_per_mb = double(re.states) * 1048576.0 /
                     double(std::max<std::uint64_t>(re.store.peak_estimated_bytes, 1));
  return r;
}

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

}  // namespace

TEST_CASE("json carries every field exactly") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RunReport r = sample_report(seed);
    auto j = nlohmann::json::parse(lpnreach::to_json(r));
    CHECK(j.at("model").get<std::string>() == r.model);
    CHECK(j.at("backend").get<std::string>() == r.reach.backend);
    CHECK(j.at("states").get<std::uint64_t>() == r.reach.states);
    CHECK(j.at("firings").get<std::uint64_t>() == r.reach.firings);
    CHECK(j.at("elapsed_seconds").get<double>() == r.reach.elapsed_seconds);
    CHECK(j.at("termination").get<std::string>() == "completed");
    CHECK(j.at("threshold").get<std::uint64_t>() == r.threshold);
    CHECK(j.at("store_entries").get<std::uint64_t>() == r.reach.store.entries);
    CHECK(j.at("store_nodes").get<std::uint64_t>() == r.reach.store.nodes);
    CHECK(j.at("store_edges").get<std::uint64_t>() == r.reach.store.edges);
    CHECK(j.at("estimated_bytes").get<std::uint64_t>() ==
          r.reach.store.estimated_bytes);
    CHECK(j.at("peak_estimated_bytes").get<std::uint64_t>() ==
          r.reach.store.peak_estimated_bytes);
    CHECK(j.at("flushes").get<std::uint64_t>() == r.reach.store.flushes);
    CHECK(j.at("unions").get<std::uint64_t>() == r.reach.store.unions);
    CHECK(j.at("interned_local_states").get<std::uint64_t>() ==
          r.reach.interned_local_states);
    CHECK(j.at("interned_bytes").get<std::uint64_t>() ==
          r.reach.interned_bytes);
    CHECK(j.at("states_per_second").get<double>() == r.reach.states_per_second);
    CHECK(j.at("states_per_mb").get<double>() == r.reach.states_per_mb);
    CHECK(j.size() == 18);
  }
}

TEST_CASE("csv and json serializations agree cell for cell") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RunReport r = sample_report(seed);
    auto j = nlohmann::json::parse(lpnreach::to_json(r));
    auto keys = split_csv(lpnreach::csv_header());
    auto vals = split_csv(lpnreach::to_csv_row(r));
    REQUIRE(keys.size() == 18);
    REQUIRE(vals.size() == 18);
    // Strip the trailing newline cells carry none; last cell keeps its \n.
    REQUIRE(!keys.back().empty());
    if (keys.back().back() == '\n') keys.back().pop_back();
    if (vals.back().back() == '\n') vals.back().pop_back();
    for (size_t i = 0; i < keys.size(); ++i) {
      const auto& cell = vals[i];
      const auto& jv = j.at(keys[i]);
      if (jv.is_string()) {
        CHECK(jv.get<std::string>() == cell);
      } else if (jv.is_number_float()) {
        // Shortest round-trip text: parsing the cell must land on the same
        // bits the json parser produced.
        CHECK(std::stod(cell) == jv.get<double>());
      } else {
        CHECK(std::to_string(jv.get<std::uint64_t>()) == cell);
      }
    }
  }
}

TEST_CASE("derived rates recompute exactly from the raw fields") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    RunReport r = sample_report(seed);
    auto j = nlohmann::json::parse(lpnreach::to_json(r));
    double states = double(j.at("states").get<std::uint64_t>());
    double elapsed = j.at("elapsed_seconds").get<double>();
    double peak = double(j.at("peak_estimated_bytes").get<std::uint64_t>());
    CHECK(j.at("states_per_second").get<double>() ==
          states / std::max(elapsed, 1e-9));
    CHECK(j.at("states_per_mb").get<double>() ==
          states * 1048576.0 / std::max(peak, 1.0));
  }
}

TEST_CASE("text report names every field") {
  RunReport r = sample_report(7);
  std::string t = lpnreach::to_text(r);
  for (const char* label :
       {"model", "backend", "states", "firings", "elapsed seconds",
        "termination", "flush threshold", "store entries", "store nodes",
        "store edges", "estimated bytes", "peak estimated bytes", "flushes",
        "unions", "interned local states", "interned bytes",
        "states per second", "states per MB"}) {
    INFO(label);
    CHECK(t.find(label) != std::string::npos);
  }
  CHECK(t.find(std::to_string(r.reach.states)) != std::string::npos);
}

TEST_CASE("json array holds one object per run") {
  std::vector<RunReport> rs = {sample_report(1), sample_report(2),
                               sample_report(3)};
  auto arr = nlohmann::json::parse(lpnreach::to_json_array(rs));
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 3);
  for (size_t i = 0; i < rs.size(); ++i) {
    CHECK(arr[i].at("model").get<std::string>() == rs[i].model);
    CHECK(arr[i].size() == 18);
  }
}

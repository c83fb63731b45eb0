#include "lpnreach/report.hpp"

#include <charconv>

#include "json.hpp"

namespace lpnreach {

namespace {

std::string double_str(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, p);
}

nlohmann::json to_json_value(const RunReport& r) {
  return nlohmann::json{
      {"model", r.model},
      {"backend", r.reach.backend},
      {"states", r.reach.states},
      {"firings", r.reach.firings},
      {"elapsed_seconds", r.reach.elapsed_seconds},
      {"termination", std::string(termination_name(r.reach.termination))},
      {"threshold", r.threshold},
      {"store_entries", r.reach.store.entries},
      {"store_nodes", r.reach.store.nodes},
      {"store_edges", r.reach.store.edges},
      {"estimated_bytes", r.reach.store.estimated_bytes},
      {"peak_estimated_bytes", r.reach.store.peak_estimated_bytes},
      {"flushes", r.reach.store.flushes},
      {"unions", r.reach.store.unions},
      {"interned_local_states", r.reach.interned_local_states},
      {"interned_bytes", r.reach.interned_bytes},
      {"states_per_second", r.reach.states_per_second},
      {"states_per_mb", r.reach.states_per_mb},
  };
}

}  // namespace

std::string to_json(const RunReport& r) {
  // nlohmann::json orders object keys alphabetically, which is exactly the
  // canonical form the determinism checks diff.
  return to_json_value(r).dump(2) + "\n";
}

std::string to_json_array(const std::vector<RunReport>& rs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rs) arr.push_back(to_json_value(r));
  return arr.dump(2) + "\n";
}

std::string csv_header() {
  return "model,backend,states,firings,elapsed_seconds,termination,"
         "threshold,store_entries,store_nodes,store_edges,estimated_bytes,"
         "peak_estimated_bytes,flushes,unions,interned_local_states,"
         "interned_bytes,states_per_second,states_per_mb\n";
}

std::string to_csv_row(const RunReport& r) {
  std::string out;
  out += r.model;
  out += ',';
  out += r.reach.backend;
  out += ',';
  out += std::to_string(r.reach.states);
  out += ',';
  out += std::to_string(r.reach.firings);
  out += ',';
  out += double_str(r.reach.elapsed_seconds);
  out += ',';
  out += termination_name(r.reach.termination);
  out += ',';
  out += std::to_string(r.threshold);
  out += ',';
  out += std::to_string(r.reach.store.entries);
  out += ',';
  out += std::to_string(r.reach.store.nodes);
  out += ',';
  out += std::to_string(r.reach.store.edges);
  out += ',';
  out += std::to_string(r.reach.store.estimated_bytes);
  out += ',';
  out += std::to_string(r.reach.store.peak_estimated_bytes);
  out += ',';
  out += std::to_string(r.reach.store.flushes);
  out += ',';
  out += std::to_string(r.reach.store.unions);
  out += ',';
  out += std::to_string(r.reach.interned_local_states);
  out += ',';
  out += std::to_string(r.reach.interned_bytes);
  out += ',';
  out += double_str(r.reach.states_per_second);
  out += ',';
  out += double_str(r.reach.states_per_mb);
  out += '\n';
  return out;
}

std::string to_text(const RunReport& r) {
  std::string out;
  out += "model:                 " + r.model + "\n";
  out += "backend:               " + r.reach.backend + "\n";
  out += "states:                " + std::to_string(r.reach.states) + "\n";
  out += "firings:               " + std::to_string(r.reach.firings) + "\n";
  out += "elapsed seconds:       " + double_str(r.reach.elapsed_seconds) + "\n";
  out += "termination:           " +
         std::string(termination_name(r.reach.termination)) + "\n";
  out += "flush threshold:       " + std::to_string(r.threshold) + "\n";
  out += "store entries:         " + std::to_string(r.reach.store.entries) +
         "\n";
  out += "store nodes:           " + std::to_string(r.reach.store.nodes) +
         "\n";
  out += "store edges:           " + std::to_string(r.reach.store.edges) +
         "\n";
  out += "estimated bytes:       " +
         std::to_string(r.reach.store.estimated_bytes) + "\n";
  out += "peak estimated bytes:  " +
         std::to_string(r.reach.store.peak_estimated_bytes) + "\n";
  out += "flushes:               " + std::to_string(r.reach.store.flushes) +
         "\n";
  out += "unions:                " + std::to_string(r.reach.store.unions) +
         "\n";
  out += "interned local states: " +
         std::to_string(r.reach.interned_local_states) + "\n";
  out += "interned bytes:        " + std::to_string(r.reach.interned_bytes) +
         "\n";
  out += "states per second:     " + double_str(r.reach.states_per_second) +
         "\n";
  out += "states per MB:         " + double_str(r.reach.states_per_mb) + "\n";
  return out;
}

}  // namespace lpnreach

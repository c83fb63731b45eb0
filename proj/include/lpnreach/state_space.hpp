#ifndef LPNREACH_STATE_SPACE_HPP
#define LPNREACH_STATE_SPACE_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "lpnreach/model.hpp"

namespace lpnreach {

// Global state: one dense local-state index per module.
using GlobalState = std::vector<std::uint32_t>;

struct GlobalStateHash {
  std::size_t operator()(const GlobalState& g) const {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint32_t x : g) h = (h ^ x) * 0x100000001b3ull;
    return h;
  }
};

// Per-module bijection between local states (marking, valuation) and dense
// indices handed out in first-seen order. Indices never change once
// assigned; the search stores only indices and the decision-diagram layers
// use them as edge labels.
class LocalStateTable {
 public:
  // Returns the existing index or assigns the next dense one.
  std::uint32_t intern(const ModuleConfig& ls);

  const ModuleConfig& lookup(std::uint32_t index) const {
    if (index >= by_index_.size())
      throw ContractViolation("local state index out of range");
    return *by_index_[index];
  }

  std::size_t size() const { return by_index_.size(); }

 private:
  struct Hash {
    std::size_t operator()(const ModuleConfig& mc) const {
      std::size_t h = 0xcbf29ce484222325ull;
      for (std::uint32_t p : mc.marking) h = (h ^ p) * 0x100000001b3ull;
      h = (h ^ 0xffu) * 0x100000001b3ull;
      for (std::int64_t v : mc.values)
        h = (h ^ static_cast<std::uint64_t>(v)) * 0x100000001b3ull;
      return h;
    }
  };
  std::unordered_map<ModuleConfig, std::uint32_t, Hash> index_;
  std::vector<const ModuleConfig*> by_index_;  // points into index_ keys
};

// One table per module plus the glue between configurations and index
// tuples.
class StateTables {
 public:
  explicit StateTables(const LpnSystem& sys)
      : sys_(&sys), tables_(sys.module_count()) {}
  // The system must outlive the tables; a temporary cannot.
  explicit StateTables(LpnSystem&&) = delete;

  const LpnSystem& system() const { return *sys_; }

  LocalStateTable& table(std::uint32_t module) { return tables_[module]; }
  const LocalStateTable& table(std::uint32_t module) const {
    return tables_[module];
  }

  // Interns every module's initial local state; on fresh tables this yields
  // the all-zero tuple.
  GlobalState initial_global();

  // Reconstructs the full configuration referenced by an index tuple.
  Config config_of(const GlobalState& g) const;

  // Fires transition t (which must be enabled) on configuration c (which
  // must correspond to g) and interns the result. Only modules the
  // transition can touch are re-interned; all other positions of g carry
  // over, which is what keeps shared subtuples shared downstream.
  GlobalState successor(const GlobalState& g, const Config& c,
                        std::uint32_t t);

  // Same, but pulls the needed module slices straight from the tables, so
  // the caller never materializes a full configuration.
  GlobalState successor(const GlobalState& g, std::uint32_t t);

  // Total distinct local states across all modules.
  std::size_t interned_states() const;

  // Bytes attributed to the interned local states, by the documented
  // formula: each local state costs 16 bytes of index overhead plus 4 bytes
  // per marked place plus 8 bytes per variable.
  std::size_t interned_bytes() const;

  // Deterministic listing "module/index -> {places} (var=value, ...)" for
  // golden tests.
  std::string dump() const;

 private:
  GlobalState apply_and_intern(const GlobalState& g, const Transition& tr,
                               std::vector<ModuleConfig> next);

  const LpnSystem* sys_;
  std::vector<LocalStateTable> tables_;
};

}  // namespace lpnreach

#endif

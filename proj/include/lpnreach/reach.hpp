#ifndef LPNREACH_REACH_HPP
#define LPNREACH_REACH_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lpnreach/state_space.hpp"
#include "lpnreach/store.hpp"

namespace lpnreach {

enum class Termination { kCompleted, kStateCap, kTimeout };

std::string_view termination_name(Termination t);

struct ReachLimits {
  std::uint64_t max_states = 0;       // 0 means unlimited
  double time_limit_seconds = 900.0;  // <= 0 means unlimited
};

struct ReachReport {
  std::string backend;
  std::uint64_t states = 0;
  std::uint64_t firings = 0;
  double elapsed_seconds = 0.0;
  Termination termination = Termination::kCompleted;
  StoreReport store;
  std::uint64_t interned_local_states = 0;
  std::uint64_t interned_bytes = 0;
  // states / elapsed seconds, and states per MB (1 MB = 1048576 bytes) of
  // the store's peak estimated footprint.
  double states_per_second = 0.0;
  double states_per_mb = 0.0;
};

// Memo of each module's locally enabled transitions per interned local
// state. Sound because a transition's preset and guard only read its owner
// module's marking and variable copies, so enabledness is a function of the
// owner's local state alone.
class EnabledCache {
 public:
  explicit EnabledCache(const LpnSystem& sys) : sys_(&sys) {}

  // Appends the enabled transitions of g to out (cleared first), in
  // ascending global index order.
  void enabled(const StateTables& tables, const GlobalState& g,
               std::vector<std::uint32_t>& out);

 private:
  struct ModuleCache {
    std::vector<std::vector<std::uint32_t>> lists;
    std::vector<char> known;
  };

  const std::vector<std::uint32_t>& local_list(const StateTables& tables,
                                               std::uint32_t module,
                                               std::uint32_t index);

  const LpnSystem* sys_;
  std::vector<ModuleCache> modules_;
};

// Enabled transitions of the index tuple g, ascending. Convenience wrapper
// that reconstructs the configuration; the search itself uses EnabledCache.
std::vector<std::uint32_t> enabled_global(const LpnSystem& sys,
                                          const StateTables& tables,
                                          const GlobalState& g);

// Depth-first search over the reachable states, storing every distinct
// state in the given store exactly once. Frames carry the enabled set
// computed once at push time; transitions fire in ascending global index
// order, so the exploration order is deterministic. The tables and the
// store must be fresh. Returns the filled report; the store is finalized.
ReachReport dfs_reach(StateTables& tables, StateStore& store,
                      const ReachLimits& limits = {});

}  // namespace lpnreach

#endif

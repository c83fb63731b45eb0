#ifndef LPNREACH_TESTS_BFS_ORACLE_HPP
#define LPNREACH_TESTS_BFS_ORACLE_HPP

// Brute-force breadth-first reachability used as the independent oracle:
// plain queue over full configurations, a std::set of flattened keys, no
// interning, no state stores, no caching. Deliberately shares nothing with
// the engine under test beyond the model semantics themselves.

#include <cstdint>
#include <deque>
#include <set>
#include <vector>

#include "lpnreach/model.hpp"

namespace lpnreach_tests {

struct OracleResult {
  std::uint64_t states = 0;
  std::uint64_t firings = 0;
};

inline std::vector<std::int64_t> flatten(const lpnreach::Config& c) {
  std::vector<std::int64_t> key;
  for (const lpnreach::ModuleConfig& mc : c) {
    key.push_back(-1);
    for (std::uint32_t p : mc.marking) key.push_back(p);
    key.push_back(-2);
    for (std::int64_t v : mc.values) key.push_back(v);
  }
  return key;
}

inline OracleResult bfs_reach_oracle(const lpnreach::LpnSystem& sys,
                                     std::uint64_t state_bound = 2000000) {
  std::set<std::vector<std::int64_t>> seen;
  std::deque<lpnreach::Config> queue;

  lpnreach::Config init = sys.initial_config();
  seen.insert(flatten(init));
  queue.push_back(std::move(init));

  OracleResult r;
  while (!queue.empty()) {
    lpnreach::Config c = std::move(queue.front());
    queue.pop_front();
    for (std::uint32_t t : lpnreach::enabled_global(sys, c)) {
      ++r.firings;
      lpnreach::Config succ = lpnreach::fire(sys, t, c);
      if (seen.insert(flatten(succ)).second) {
        if (seen.size() > state_bound)
          throw lpnreach::ContractViolation("oracle state bound exceeded");
        queue.push_back(std::move(succ));
      }
    }
  }
  r.states = seen.size();
  return r;
}

}  // namespace lpnreach_tests

#endif

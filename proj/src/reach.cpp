#include "lpnreach/reach.hpp"

#include <algorithm>
#include <chrono>

namespace lpnreach {

std::string_view termination_name(Termination t) {
  switch (t) {
    case Termination::kCompleted:
      return "completed";
    case Termination::kStateCap:
      return "state_cap";
    case Termination::kTimeout:
      return "timeout";
  }
  throw ContractViolation("unknown termination value");
}

namespace {

bool locally_enabled(const Transition& tr, const ModuleConfig& mc) {
  if (!std::includes(mc.marking.begin(), mc.marking.end(), tr.preset.begin(),
                     tr.preset.end()))
    return false;
  try {
    return tr.guard.eval_bool(std::span<const std::int64_t>(mc.values));
  } catch (const EvalError& e) {
    throw EvalError("transition " + tr.id + ": " + e.what());
  }
}

}  // namespace

const std::vector<std::uint32_t>& EnabledCache::local_list(
    const StateTables& tables, std::uint32_t module, std::uint32_t index) {
  if (modules_.empty()) modules_.resize(sys_->module_count());
  ModuleCache& mc = modules_[module];
  if (index >= mc.lists.size()) {
    mc.lists.resize(index + 1);
    mc.known.resize(index + 1, 0);
  }
  if (!mc.known[index]) {
    const ModuleConfig& local = tables.table(module).lookup(index);
    std::vector<std::uint32_t>& list = mc.lists[index];
    for (std::uint32_t t : sys_->modules()[module].transitions)
      if (locally_enabled(sys_->transitions()[t], local)) list.push_back(t);
    mc.known[index] = 1;
  }
  return mc.lists[index];
}

void EnabledCache::enabled(const StateTables& tables, const GlobalState& g,
                           std::vector<std::uint32_t>& out) {
  out.clear();
  for (std::uint32_t m = 0; m < g.size(); ++m) {
    const std::vector<std::uint32_t>& list = local_list(tables, m, g[m]);
    out.insert(out.end(), list.begin(), list.end());
  }
}

std::vector<std::uint32_t> enabled_global(const LpnSystem& sys,
                                          const StateTables& tables,
                                          const GlobalState& g) {
  return enabled_global(sys, tables.config_of(g));
}

ReachReport dfs_reach(StateTables& tables, StateStore& store,
                      const ReachLimits& limits) {
  using Clock = std::chrono::steady_clock;
  const Clock::time_point t0 = Clock::now();

  const LpnSystem& sys = tables.system();
  EnabledCache cache(sys);

  struct Frame {
    GlobalState state;
    std::vector<std::uint32_t> enabled;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;

  Termination term = Termination::kCompleted;
  std::uint64_t firings = 0;
  std::uint64_t tick = 0;

  auto out_of_time = [&]() {
    if (limits.time_limit_seconds <= 0) return false;
    std::chrono::duration<double> el = Clock::now() - t0;
    return el.count() > limits.time_limit_seconds;
  };
  auto at_cap = [&]() {
    return limits.max_states != 0 && store.size() >= limits.max_states;
  };

  GlobalState init = tables.initial_global();
  store.add_if_new(init);
  if (at_cap()) {
    term = Termination::kStateCap;
  } else {
    Frame first;
    first.state = std::move(init);
    cache.enabled(tables, first.state, first.enabled);
    stack.push_back(std::move(first));
  }

  while (!stack.empty()) {
    Frame& f = stack.back();
    if (f.next == f.enabled.size()) {
      stack.pop_back();
      continue;
    }
    std::uint32_t t = f.enabled[f.next++];
    ++firings;
    GlobalState succ = tables.successor(f.state, t);
    if (store.add_if_new(succ)) {
      if (at_cap()) {
        term = Termination::kStateCap;
        break;
      }
      Frame nf;
      nf.state = std::move(succ);
      cache.enabled(tables, nf.state, nf.enabled);
      stack.push_back(std::move(nf));
    }
    if ((++tick & 1023u) == 0 && out_of_time()) {
      term = Termination::kTimeout;
      break;
    }
  }

  store.finalize();
  std::chrono::duration<double> el = Clock::now() - t0;

  ReachReport rep;
  rep.backend = store.kind();
  rep.states = store.size();
  rep.firings = firings;
  rep.elapsed_seconds = el.count();
  rep.termination = term;
  rep.store = store.report();
  rep.interned_local_states = tables.interned_states();
  rep.interned_bytes = tables.interned_bytes();
  rep.states_per_second =
      static_cast<double>(rep.states) / std::max(rep.elapsed_seconds, 1e-9);
  double peak = static_cast<double>(
      std::max<std::uint64_t>(rep.store.peak_estimated_bytes, 1));
  rep.states_per_mb = static_cast<double>(rep.states) * 1048576.0 / peak;
  return rep;
}

}  // namespace lpnreach

#include <random>
#include <string>
#include <vector>

#include "bfs_oracle.hpp"
#include "doctest.h"
#include "fig1.hpp"
#include "lpnreach/reach.hpp"

using namespace lpnreach;
using lpnreach_tests::bfs_reach_oracle;
using lpnreach_tests::OracleResult;

namespace {

const char* kKinds[] = {"hash", "mdt", "mdd", "hybrid"};

// n independent one-place modules, each toggling its own bit: 2^n states.
std::vector<ModuleDef> toggles(int n) {
  std::vector<ModuleDef> defs;
  for (int i = 0; i < n; ++i) {
    ModuleDef m;
    m.name = "T" + std::to_string(i);
    std::string p = "p" + std::to_string(i);
    std::string x = "x" + std::to_string(i);
    m.vars = {{x, 0}};
    m.places = {p};
    m.initial_marking = {p};
    m.transitions = {
        {"up", {p}, {p}, x + " == 0", {{x, "1"}}},
        {"down", {p}, {p}, x + " == 1", {{x, "0"}}},
    };
    defs.push_back(std::move(m));
  }
  return defs;
}

ReachReport run(const LpnSystem& sys, const char* kind,
                std::uint64_t threshold = 64, ReachLimits limits = {}) {
  StateTables tables(sys);
  auto store = make_store(kind, static_cast<std::uint32_t>(sys.module_count()),
                          threshold);
  return dfs_reach(tables, *store, limits);
}

}  // namespace

TEST_CASE("single boolean toggle reaches two states") {
  ModuleDef m;
  m.name = "M";
  m.vars = {{"x", 0}};
  m.places = {"p"};
  m.initial_marking = {"p"};
  m.transitions = {{"flip", {"p"}, {"p"}, "", {{"x", "1 - x"}}}};
  LpnSystem sys = compose({m});

  OracleResult oracle = bfs_reach_oracle(sys);
  CHECK(oracle.states == 2);

  for (const char* kind : kKinds) {
    CAPTURE(kind);
    ReachReport rep = run(sys, kind);
    CHECK(rep.states == 2);
    CHECK(rep.firings == oracle.firings);
    CHECK(rep.termination == Termination::kCompleted);
  }
}

TEST_CASE("immediate deadlock leaves one state and no firings") {
  ModuleDef m;
  m.name = "M";
  m.vars = {{"x", 0}};
  m.places = {"p"};
  m.initial_marking = {"p"};
  m.transitions = {{"never", {"p"}, {"p"}, "x == 1", {}}};
  LpnSystem sys = compose({m});
  ReachReport rep = run(sys, "hash");
  CHECK(rep.states == 1);
  CHECK(rep.firings == 0);
  CHECK(rep.termination == Termination::kCompleted);
}

TEST_CASE("three-module circuit matches the oracle on every backend") {
  LpnSystem sys = compose(fig1_defs());
  OracleResult oracle = bfs_reach_oracle(sys);
  CHECK(oracle.states > 2);

  for (const char* kind : kKinds) {
    CAPTURE(kind);
    ReachReport rep = run(sys, kind, 4);
    CHECK(rep.states == oracle.states);
    CHECK(rep.firings == oracle.firings);
    CHECK(rep.termination == Termination::kCompleted);
    CHECK(rep.store.states == oracle.states);
  }
}

TEST_CASE("eight independent toggles: 256 states on every backend") {
  LpnSystem sys = compose(toggles(8));
  OracleResult oracle = bfs_reach_oracle(sys);
  CHECK(oracle.states == 256);

  std::uint64_t firings[4];
  for (int k = 0; k < 4; ++k) {
    ReachReport rep = run(sys, kKinds[k], 10);
    CHECK(rep.states == 256);
    firings[k] = rep.firings;
    if (std::string(kKinds[k]) == "hybrid") {
      CHECK(rep.store.flushes <= 256 / 10 + 1);
      CHECK(rep.store.unions == rep.store.flushes);
    }
    if (std::string(kKinds[k]) == "mdd") CHECK(rep.store.unions == 256);
  }
  CHECK(firings[0] == firings[1]);
  CHECK(firings[1] == firings[2]);
  CHECK(firings[2] == firings[3]);
  // every state enables exactly 8 toggle transitions
  CHECK(firings[0] == 256 * 8);
}

TEST_CASE("state cap stops the search early") {
  LpnSystem sys = compose(toggles(8));
  ReachLimits limits;
  limits.max_states = 17;
  ReachReport rep = run(sys, "hash", 64, limits);
  CHECK(rep.termination == Termination::kStateCap);
  CHECK(rep.states == 17);

  limits.max_states = 1;
  ReachReport one = run(sys, "hash", 64, limits);
  CHECK(one.termination == Termination::kStateCap);
  CHECK(one.states == 1);
  CHECK(one.firings == 0);
}

TEST_CASE("time limit reports a timeout") {
  LpnSystem sys = compose(toggles(16));  // 65536 states, plenty of work
  ReachLimits limits;
  limits.time_limit_seconds = 1e-6;
  ReachReport rep = run(sys, "hash", 64, limits);
  CHECK(rep.termination == Termination::kTimeout);
  CHECK(rep.states < 65536);
}

TEST_CASE("runs are deterministic apart from wall-clock fields") {
  LpnSystem sys = compose(fig1_defs());
  for (const char* kind : kKinds) {
    CAPTURE(kind);
    ReachReport a = run(sys, kind, 4);
    ReachReport b = run(sys, kind, 4);
    CHECK(a.states == b.states);
    CHECK(a.firings == b.firings);
    CHECK(a.termination == b.termination);
    CHECK(a.store.nodes == b.store.nodes);
    CHECK(a.store.edges == b.store.edges);
    CHECK(a.store.estimated_bytes == b.store.estimated_bytes);
    CHECK(a.store.peak_estimated_bytes == b.store.peak_estimated_bytes);
    CHECK(a.store.flushes == b.store.flushes);
    CHECK(a.store.unions == b.store.unions);
    CHECK(a.interned_local_states == b.interned_local_states);
    CHECK(a.states_per_mb == b.states_per_mb);
  }
}

TEST_CASE("store dumps agree between runs and across tuple backends") {
  LpnSystem sys = compose(fig1_defs());

  StateTables ta(sys);
  auto sa = make_store("hash", 3);
  dfs_reach(ta, *sa);

  StateTables tb(sys);
  auto sb = make_store("mdt", 3);
  dfs_reach(tb, *sb);

  CHECK(sa->dump() == sb->dump());
  CHECK(ta.dump() == tb.dump());
}

TEST_CASE("enabled cache agrees with the direct computation") {
  LpnSystem sys = compose(fig1_defs());
  StateTables tables(sys);
  EnabledCache cache(sys);
  std::mt19937 rng(7);

  GlobalState g = tables.initial_global();
  std::vector<std::uint32_t> fast;
  for (int step = 0; step < 300; ++step) {
    cache.enabled(tables, g, fast);
    std::vector<std::uint32_t> slow = enabled_global(sys, tables, g);
    REQUIRE(fast == slow);
    CHECK(std::is_sorted(fast.begin(), fast.end()));
    REQUIRE(!fast.empty());
    g = tables.successor(g, fast[rng() % fast.size()]);
  }
}

TEST_CASE("both successor overloads agree") {
  LpnSystem sys = compose(fig1_defs());
  StateTables tables(sys);
  EnabledCache cache(sys);
  std::mt19937 rng(9);

  GlobalState g = tables.initial_global();
  std::vector<std::uint32_t> en;
  for (int step = 0; step < 200; ++step) {
    cache.enabled(tables, g, en);
    REQUIRE(!en.empty());
    std::uint32_t t = en[rng() % en.size()];
    Config c = tables.config_of(g);
    CHECK(tables.successor(g, c, t) == tables.successor(g, t));
    g = tables.successor(g, t);
  }
}

TEST_CASE("module order does not change the state count") {
  std::vector<ModuleDef> ab = fig1_defs();
  std::vector<ModuleDef> ba = {ab[2], ab[0], ab[1]};
  ReachReport first = run(compose(ab), "hash");
  ReachReport second = run(compose(ba), "hash");
  CHECK(first.states == second.states);
  CHECK(first.firings == second.firings);
}

TEST_CASE("evaluation failures name the transition") {
  ModuleDef m;
  m.name = "M";
  m.vars = {{"x", 0}};
  m.places = {"p"};
  m.initial_marking = {"p"};
  m.transitions = {{"bad", {"p"}, {"p"}, "", {{"x", "1 / x"}}}};
  LpnSystem sys = compose({m});
  StateTables tables(sys);
  auto store = make_store("hash", 1);
  try {
    dfs_reach(tables, *store);
    FAIL("expected EvalError");
  } catch (const EvalError& e) {
    std::string msg = e.what();
    CHECK(msg.find("M.bad") != std::string::npos);
    CHECK(msg.find("division by zero") != std::string::npos);
  }
}

TEST_CASE("termination names are stable") {
  CHECK(termination_name(Termination::kCompleted) == "completed");
  CHECK(termination_name(Termination::kStateCap) == "state_cap");
  CHECK(termination_name(Termination::kTimeout) == "timeout");
}

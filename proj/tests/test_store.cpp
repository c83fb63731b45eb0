#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "lpnreach/store.hpp"

using namespace lpnreach;

namespace {

const char* kKinds[] = {"hash", "mdt", "mdd", "hybrid"};

GlobalState rand_state(std::mt19937& rng, std::size_t arity,
                       std::uint32_t labels) {
  GlobalState g(arity);
  for (auto& v : g) v = static_cast<std::uint32_t>(rng() % labels);
  return g;
}

}  // namespace

TEST_CASE("every backend adds each distinct state exactly once") {
  for (const char* kind : kKinds) {
    CAPTURE(kind);
    auto store = make_store(kind, 3, 4);
    GlobalState a = {1, 2, 3};
    GlobalState b = {1, 2, 4};
    CHECK(store->add_if_new(a));
    CHECK(!store->add_if_new(a));
    CHECK(store->add_if_new(b));
    CHECK(store->size() == 2);
    CHECK(store->contains(a));
    CHECK(store->contains(b));
    CHECK(!store->contains(GlobalState{0, 0, 0}));
    store->finalize();
    CHECK(store->size() == 2);
    CHECK(store->contains(a));
    CHECK(store->report().states == 2);
  }
}

TEST_CASE("hash report applies the entry formula") {
  auto store = make_store("hash", 5);
  for (std::uint32_t i = 0; i < 10; ++i)
    store->add_if_new(GlobalState{i, 0, 0, 0, 0});
  StoreReport r = store->report();
  CHECK(r.entries == 10);
  CHECK(r.estimated_bytes == 10 * (4 * 5 + 32));
  CHECK(r.peak_estimated_bytes == r.estimated_bytes);
  CHECK(r.unions == 0);
  CHECK(r.flushes == 0);
}

TEST_CASE("mdd store performs one top-level union per new state") {
  auto store = make_store("mdd", 3);
  std::mt19937 rng(5);
  std::set<GlobalState> seen;
  for (int i = 0; i < 200; ++i) {
    GlobalState g = rand_state(rng, 3, 4);
    bool added = store->add_if_new(g);
    CHECK(added == seen.insert(g).second);
  }
  store->finalize();
  StoreReport r = store->report();
  CHECK(r.states == seen.size());
  CHECK(r.unions == seen.size());
  CHECK(r.estimated_bytes == 48 * r.nodes + 8 * r.edges);
  for (const GlobalState& g : seen) CHECK(store->contains(g));
}

TEST_CASE("hybrid flush cadence respects the threshold bound") {
  auto store = make_store("hybrid", 3, 5);
  for (std::uint32_t i = 0; i < 12; ++i) {
    CHECK(store->add_if_new(GlobalState{i, i, i}));
    CHECK(store->contains(GlobalState{i, i, i}));
  }
  StoreReport before = store->report();
  CHECK(before.flushes == 2);  // triggered at 5 and at 10 buffered states
  store->finalize();
  StoreReport after = store->report();
  CHECK(after.flushes == 3);  // the final flush drains the remaining 2
  CHECK(after.unions == after.flushes);
  CHECK(after.states == 12);
  // an already-final store flushes nothing further
  store->finalize();
  CHECK(store->report().flushes == 3);
  CHECK(store->dump() == store->dump());
}

TEST_CASE("hybrid membership spans buffer and main diagram") {
  auto store = make_store("hybrid", 2, 4);
  std::vector<GlobalState> all;
  for (std::uint32_t i = 0; i < 11; ++i) {
    all.push_back(GlobalState{i / 4, i % 4});
    store->add_if_new(all.back());
  }
  // 8 states flushed into main, 3 still buffered
  for (const GlobalState& g : all) CHECK(store->contains(g));
  for (const GlobalState& g : all) CHECK(!store->add_if_new(g));
  CHECK(store->size() == 11);
}

TEST_CASE("property: flush count never exceeds states/threshold + 1") {
  std::mt19937 rng(31);
  for (int round = 0; round < 30; ++round) {
    std::uint64_t theta = 1 + rng() % 50;
    auto store = make_store("hybrid", 4, theta);
    std::set<GlobalState> seen;
    std::size_t n = rng() % 400;
    for (std::size_t i = 0; i < n; ++i) {
      GlobalState g = rand_state(rng, 4, 3);
      CHECK(store->add_if_new(g) == seen.insert(g).second);
    }
    store->finalize();
    StoreReport r = store->report();
    CHECK(r.states == seen.size());
    CHECK(r.flushes <= seen.size() / theta + 1);
    CHECK(r.unions <= seen.size() / theta + 1);
  }
}

TEST_CASE("property: all four backends answer identically") {
  std::mt19937 rng(20240615);
  for (int round = 0; round < 15; ++round) {
    std::uint32_t arity = 2 + rng() % 4;
    std::uint64_t theta = 1 + rng() % 30;
    std::unique_ptr<StateStore> stores[4];
    for (int k = 0; k < 4; ++k) stores[k] = make_store(kKinds[k], arity, theta);

    std::set<GlobalState> oracle;
    for (int i = 0; i < 300; ++i) {
      GlobalState g = rand_state(rng, arity, 4);
      if (rng() % 3 == 0) {
        bool expect = oracle.count(g) > 0;
        for (auto& s : stores) CHECK(s->contains(g) == expect);
      } else {
        bool fresh = oracle.insert(g).second;
        for (auto& s : stores) CHECK(s->add_if_new(g) == fresh);
      }
    }
    for (auto& s : stores) {
      s->finalize();
      CHECK(s->size() == oracle.size());
      CHECK(s->report().states == oracle.size());
      for (const GlobalState& g : oracle) CHECK(s->contains(g));
    }
    // the two tuple-listing dumps agree line for line
    CHECK(stores[0]->dump() == stores[1]->dump());
  }
}

TEST_CASE("dumps are deterministic and sorted") {
  auto hash_store = make_store("hash", 3);
  auto mdt_store = make_store("mdt", 3);
  std::vector<GlobalState> tuples = {{2, 1, 0}, {0, 1, 2}, {0, 0, 9}};
  for (const GlobalState& g : tuples) {
    hash_store->add_if_new(g);
    mdt_store->add_if_new(g);
  }
  CHECK(hash_store->dump() == "0 0 9\n0 1 2\n2 1 0\n");
  CHECK(mdt_store->dump() == hash_store->dump());

  auto mdd_store = make_store("mdd", 2);
  CHECK(mdd_store->dump() == "empty\n");
  mdd_store->add_if_new(GlobalState{1, 2});
  CHECK(mdd_store->dump() == "n0 L0: 1->n1\nn1 L1: 2->T\n");
}

TEST_CASE("make_store rejects bad arguments") {
  CHECK_THROWS_AS(make_store("bogus", 3), ModelError);
  CHECK_THROWS_AS(make_store("hybrid", 3, 0), ModelError);
  auto store = make_store("hash", 3);
  CHECK_THROWS_AS(store->add_if_new(GlobalState{1, 2}), ContractViolation);
  CHECK_THROWS_AS(store->contains(GlobalState{1}), ContractViolation);
}

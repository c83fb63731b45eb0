#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "lpnreach/mdt.hpp"

using namespace lpnreach;

namespace {

using Tuple = std::vector<std::uint32_t>;

// Six triples whose tree shares prefixes but compresses further as a DAG.
const std::vector<Tuple> kSixTriples = {
    {0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 1, 1}, {1, 1, 2}};

Mdt six_triple_tree() {
  Mdt t(3);
  for (const Tuple& s : kSixTriples) t.add(s);
  return t;
}

}  // namespace

TEST_CASE("empty tree") {
  Mdt t(3);
  Mdt::Stats s = t.stats();
  CHECK(s.nodes == 2);  // root + terminal
  CHECK(s.edges == 0);
  CHECK(s.paths == 0);
  CHECK(!t.contains(Tuple{0, 0, 0}));
}

TEST_CASE("first insertion creates one edge per level") {
  Mdt t(3);
  CHECK(t.add(Tuple{0, 0, 0}));
  Mdt::Stats s = t.stats();
  CHECK(s.edges == 3);
  CHECK(s.paths == 1);
  CHECK(s.nodes == 4);  // root, two internal, terminal
  CHECK(t.contains(Tuple{0, 0, 0}));
}

TEST_CASE("six-triple example set") {
  Mdt t = six_triple_tree();
  Mdt::Stats s = t.stats();
  CHECK(s.paths == 6);
  CHECK(t.nonterminal_nodes() == 6);  // root, 2 at level 1, 3 at level 2
  CHECK(s.nodes == 7);
  CHECK(s.edges == 11);

  CHECK(t.contains(Tuple{0, 1, 1}));
  CHECK(t.contains(Tuple{1, 1, 2}));
  CHECK(!t.contains(Tuple{1, 0, 0}));
  CHECK(!t.contains(Tuple{2, 0, 0}));
  CHECK(!t.contains(Tuple{0, 1, 2}));
}

TEST_CASE("adding (1,1,3) creates exactly one new edge") {
  Mdt t = six_triple_tree();
  std::size_t edges_before = t.stats().edges;
  std::size_t nodes_before = t.nonterminal_nodes();
  CHECK(t.add(Tuple{1, 1, 3}));
  CHECK(t.stats().edges == edges_before + 1);
  CHECK(t.nonterminal_nodes() == nodes_before);  // edge goes to the terminal
  CHECK(t.stats().paths == 7);
}

TEST_CASE("adding a present tuple changes nothing") {
  Mdt t = six_triple_tree();
  Mdt::Stats before = t.stats();
  CHECK(!t.add(Tuple{1, 1, 1}));
  Mdt::Stats after = t.stats();
  CHECK(after.edges == before.edges);
  CHECK(after.paths == before.paths);
  CHECK(after.nodes == before.nodes);
}

TEST_CASE("arity mismatch rejected") {
  Mdt t(3);
  CHECK_THROWS_AS(t.add(Tuple{0, 0}), ContractViolation);
  CHECK_THROWS_AS(t.contains(Tuple{0, 0, 0, 0}), ContractViolation);
  CHECK_THROWS_AS(Mdt(0), ContractViolation);
}

TEST_CASE("operations visit at most arity nodes") {
  Mdt t(5);
  std::size_t v0 = t.node_visits();
  t.add(Tuple{4, 3, 2, 1, 0});
  CHECK(t.node_visits() - v0 <= 6);
  v0 = t.node_visits();
  t.contains(Tuple{4, 3, 2, 1, 0});
  CHECK(t.node_visits() - v0 <= 6);
  v0 = t.node_visits();
  t.contains(Tuple{9, 9, 9, 9, 9});  // misses at the root
  CHECK(t.node_visits() - v0 <= 6);
}

TEST_CASE("clear resets to the empty tree") {
  Mdt t = six_triple_tree();
  t.clear();
  Mdt::Stats s = t.stats();
  CHECK(s.nodes == 2);
  CHECK(s.edges == 0);
  CHECK(s.paths == 0);
  CHECK(!t.contains(Tuple{0, 0, 0}));
  CHECK(t.add(Tuple{0, 0, 0}));
}

TEST_CASE("property: agrees with a sorted-set oracle") {
  std::mt19937 rng(20240612);
  for (int round = 0; round < 30; ++round) {
    std::uint32_t arity = 3 + rng() % 4;       // 3..6
    std::uint32_t labels = 2 + rng() % 6;      // domain size 2..7
    std::size_t n = 1 + rng() % 400;
    Mdt t(arity);
    std::set<Tuple> oracle;
    for (std::size_t i = 0; i < n; ++i) {
      Tuple s(arity);
      for (auto& x : s) x = rng() % labels;
      bool fresh = oracle.insert(s).second;
      CHECK(t.add(s) == fresh);
    }
    CHECK(t.path_count() == oracle.size());

    // exhaustive membership over the full domain
    Tuple probe(arity, 0);
    for (;;) {
      CHECK(t.contains(probe) == (oracle.count(probe) > 0));
      std::size_t k = 0;
      while (k < arity && ++probe[k] == labels) probe[k++] = 0;
      if (k == arity) break;
    }
  }
}

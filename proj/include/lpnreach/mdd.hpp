#ifndef LPNREACH_MDD_HPP
#define LPNREACH_MDD_HPP

#include <cstddef>
#include <cstdint>
#include <deque>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lpnreach/errors.hpp"
#include "lpnreach/mdt.hpp"

namespace lpnreach {

// Handle to a diagram node owned by a DdManager. kDdEmpty denotes the
// diagram with no paths; it is a sentinel, not a node.
using DdHandle = std::uint32_t;
constexpr DdHandle kDdEmpty = 0xffffffffu;

// Manager for all decision diagrams of one arity. Nodes live in a pool and
// are hash-consed through a unique table keyed on (level, edge list), which
// is exactly the recursive equivalence test because children are always
// canonical before a parent is built. Levels are strict: a node at level k
// has edges only to level k+1 nodes, and only the last level's edges reach
// the shared terminal, so every path has exactly arity edges.
//
// Ownership: create/unite/compress return a root the caller owns and must
// eventually pass to remove(), which walks the diagram decrementing
// reference counts and erases nodes that reach zero. A node's reference
// count is the number of incoming edges from live nodes plus the number of
// external root handles on it. Diagrams freely share subgraphs.
class DdManager {
 public:
  struct Stats {
    std::size_t live_nodes = 0;       // non-terminal nodes in the unique table
    std::size_t reachable_nodes = 0;  // non-terminal nodes under the root
    std::size_t paths = 0;
  };

  explicit DdManager(std::uint32_t arity);

  std::uint32_t arity() const { return arity_; }

  // Diagram with the single given path.
  DdHandle create(std::span<const std::uint32_t> tuple);

  // Diagram whose path set is the union of the inputs' path sets. Inputs
  // stay valid and owned by the caller. Each top-level call uses a fresh
  // memo cache over node pairs; the cache never outlives the call.
  DdHandle unite(DdHandle a, DdHandle b);

  // unite with the memo cache disabled; exists so tests can verify the
  // cache is semantically transparent.
  DdHandle unite_uncached(DdHandle a, DdHandle b);

  // Canonical diagram with exactly the tree's paths.
  DdHandle compress(const Mdt& tree);

  bool contains(DdHandle d, std::span<const std::uint32_t> tuple) const;

  // Releases one external handle; frees every node whose count drops to
  // zero. Removing kDdEmpty is a no-op. Removing a handle that is already
  // dead aborts (best effort: reuse of the slot by a later allocation can
  // mask a stale handle).
  void remove(DdHandle d);

  Stats stats(DdHandle d) const;

  std::size_t live_nodes() const { return unique_.size(); }
  std::size_t live_edges() const { return live_edges_; }

  // Top-level unite() calls so far, including identity shortcuts.
  std::size_t union_calls() const { return union_calls_; }

  // Deterministic textual DAG: nodes renumbered in depth-first order with
  // ascending labels, one line per node, "T" for the terminal.
  std::string dump(DdHandle d) const;

 private:
  struct Node {
    std::uint32_t level = 0;
    std::uint32_t refcount = 0;
    bool live = false;
    std::vector<std::pair<std::uint32_t, DdHandle>> children;  // sorted
  };

  struct NodeHash {
    const DdManager* m;
    std::size_t operator()(DdHandle h) const;
  };
  struct NodeEq {
    const DdManager* m;
    bool operator()(DdHandle a, DdHandle b) const;
  };

  static constexpr DdHandle kTerminal = 0;

  const Node& node(DdHandle h) const { return pool_[h]; }
  Node& node(DdHandle h) { return pool_[h]; }

  DdHandle alloc();
  void free_node(DdHandle h);

  // Hash-conses (level, children). On a fresh node, claims one reference on
  // every child; on a duplicate, the candidate is discarded and the
  // existing canonical node returned.
  DdHandle intern(std::uint32_t level,
                  std::vector<std::pair<std::uint32_t, DdHandle>> children);

  void retain_root(DdHandle h);
  void release(DdHandle h);

  DdHandle unite_rec(DdHandle a, DdHandle b, bool use_cache);
  DdHandle compress_rec(const Mdt& tree, std::uint32_t mdt_node,
                        std::uint32_t level);

  std::uint32_t arity_;
  // Deque, not vector: growth must never move existing nodes, because the
  // recursive union and compress passes hold references into the pool while
  // interning new nodes.
  std::deque<Node> pool_;
  std::vector<DdHandle> free_list_;
  std::unordered_set<DdHandle, NodeHash, NodeEq> unique_;
  std::unordered_map<std::uint64_t, DdHandle> union_cache_;
  std::size_t live_edges_ = 0;
  std::size_t union_calls_ = 0;
};

}  // namespace lpnreach

#endif

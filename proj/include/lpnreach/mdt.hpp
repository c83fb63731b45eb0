#ifndef LPNREACH_MDT_HPP
#define LPNREACH_MDT_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lpnreach/errors.hpp"

namespace lpnreach {

// Trie over fixed-arity tuples of non-negative integers. Children are kept
// sorted by label, so traversal order is deterministic. All paths end in one
// conceptual terminal, represented by the sentinel index below rather than
// an allocated node.
class Mdt {
 public:
  static constexpr std::uint32_t kTerminal = 0xffffffffu;

  struct Node {
    // (label, child index) sorted by label; child is kTerminal on the last
    // level.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> children;
  };

  struct Stats {
    std::size_t nodes = 0;  // non-terminal nodes + the shared terminal
    std::size_t edges = 0;
    std::size_t paths = 0;
  };

  explicit Mdt(std::uint32_t arity);

  std::uint32_t arity() const { return arity_; }

  // Inserts the tuple; returns true if any edge was created (i.e. the tuple
  // was new).
  bool add(std::span<const std::uint32_t> tuple);

  bool contains(std::span<const std::uint32_t> tuple) const;

  // Drops every path but keeps allocated capacity; used by the flush cycle.
  void clear();

  Stats stats() const {
    return {nodes_.size() + 1, edges_, paths_};
  }

  std::size_t path_count() const { return paths_; }
  std::size_t nonterminal_nodes() const { return nodes_.size(); }

  // Cumulative count of node visits across all add/contains calls; lets
  // tests assert the per-operation O(arity) bound as a delta.
  std::size_t node_visits() const { return visits_; }

  // Read access for the compress pass: node 0 is the root; a node at depth
  // d stores edges to depth d+1 (or kTerminal at the last level).
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  std::uint32_t arity_;
  std::vector<Node> nodes_;  // [0] is the root
  std::size_t edges_ = 0;
  std::size_t paths_ = 0;
  mutable std::size_t visits_ = 0;
};

}  // namespace lpnreach

#endif

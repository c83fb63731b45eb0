#ifndef LPNREACH_STORE_HPP
#define LPNREACH_STORE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "lpnreach/state_space.hpp"

namespace lpnreach {

// Structure-level memory accounting. True heap usage is allocator- and
// platform-dependent, so every backend reports element counts and an
// estimated byte size computed from the fixed per-element costs below.
//
//   hash entry            4 * arity + 32 bytes
//   decision-tree node    32 bytes (terminal sentinel costs nothing)
//   decision-tree edge    16 bytes
//   decision-diagram node 48 bytes (terminal excluded)
//   decision-diagram edge 8 bytes
//
// Peak bytes are sampled after every mutation, including the transient
// moment inside a hybrid flush when the buffer and both diagrams coexist.
struct StoreReport {
  std::string kind;
  std::uint64_t states = 0;
  std::uint64_t entries = 0;  // hash backend only
  std::uint64_t nodes = 0;    // live structural nodes, terminal excluded
  std::uint64_t edges = 0;
  std::uint64_t estimated_bytes = 0;
  std::uint64_t peak_estimated_bytes = 0;
  std::uint64_t flushes = 0;  // hybrid backend only
  std::uint64_t unions = 0;   // top-level diagram unions performed
};

// Set of fixed-arity global states. add_if_new returns true exactly once
// per distinct state; size() counts distinct states added so far.
class StateStore {
 public:
  virtual ~StateStore() = default;

  virtual bool add_if_new(const GlobalState& g) = 0;
  virtual bool contains(const GlobalState& g) const = 0;
  virtual std::uint64_t size() const = 0;

  // Runs any end-of-search housekeeping (the hybrid backend flushes its
  // buffer). Must be called before the final report or dump.
  virtual void finalize() = 0;

  virtual StoreReport report() const = 0;

  // Deterministic text rendering of the stored set; format depends on the
  // backend (sorted tuples for hash/mdt, a node listing for mdd/hybrid).
  virtual std::string dump() const = 0;

  virtual std::string_view kind() const = 0;
};

// kind is one of "hash", "mdt", "mdd", "hybrid". flush_threshold is the
// number of buffered states that triggers a hybrid flush and must be
// positive for that backend; the other backends ignore it.
std::unique_ptr<StateStore> make_store(std::string_view kind,
                                       std::uint32_t arity,
                                       std::uint64_t flush_threshold = 65536);

}  // namespace lpnreach

#endif

#include "lpnreach/mdt.hpp"

#include <algorithm>

namespace lpnreach {

namespace {

// Sorted lookup in a node's child list. Returns the position where label
// is or should be.
std::size_t child_pos(
    const std::vector<std::pair<std::uint32_t, std::uint32_t>>& children,
    std::uint32_t label) {
  return static_cast<std::size_t>(
      std::lower_bound(children.begin(), children.end(), label,
                       [](const auto& e, std::uint32_t l) {
                         return e.first < l;
                       }) -
      children.begin());
}

}  // namespace

Mdt::Mdt(std::uint32_t arity) : arity_(arity) {
  if (arity == 0) throw ContractViolation("tuple arity must be positive");
  nodes_.emplace_back();  // root
}

bool Mdt::add(std::span<const std::uint32_t> tuple) {
  if (tuple.size() != arity_)
    throw ContractViolation("tuple arity mismatch in add");
  bool created = false;
  std::uint32_t at = 0;
  for (std::uint32_t level = 0; level < arity_; ++level) {
    ++visits_;
    bool last = level + 1 == arity_;
    auto& ch = nodes_[at].children;
    std::size_t pos = child_pos(ch, tuple[level]);
    if (pos < ch.size() && ch[pos].first == tuple[level]) {
      at = ch[pos].second;
      continue;
    }
    std::uint32_t child;
    if (last) {
      child = kTerminal;
    } else {
      child = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    // nodes_ may have reallocated; re-resolve the child list
    auto& ch2 = nodes_[at].children;
    ch2.insert(ch2.begin() + static_cast<std::ptrdiff_t>(pos),
               {tuple[level], child});
    ++edges_;
    created = true;
    if (last) ++paths_;
    at = child;
  }
  return created;
}

bool Mdt::contains(std::span<const std::uint32_t> tuple) const {
  if (tuple.size() != arity_)
    throw ContractViolation("tuple arity mismatch in contains");
  std::uint32_t at = 0;
  for (std::uint32_t level = 0; level < arity_; ++level) {
    ++visits_;
    const auto& ch = nodes_[at].children;
    std::size_t pos = child_pos(ch, tuple[level]);
    if (pos >= ch.size() || ch[pos].first != tuple[level]) return false;
    at = ch[pos].second;
  }
  return true;
}

void Mdt::clear() {
  nodes_.resize(1);
  nodes_[0].children.clear();
  edges_ = 0;
  paths_ = 0;
}

}  // namespace lpnreach

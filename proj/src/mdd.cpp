#include "lpnreach/mdd.hpp"

#include <algorithm>

namespace lpnreach {

std::size_t DdManager::NodeHash::operator()(DdHandle h) const {
  const Node& n = m->pool_[h];
  std::size_t acc = 0xcbf29ce484222325ull ^ n.level;
  for (const auto& [label, child] : n.children) {
    acc = (acc ^ label) * 0x100000001b3ull;
    acc = (acc ^ child) * 0x100000001b3ull;
  }
  return acc;
}

bool DdManager::NodeEq::operator()(DdHandle a, DdHandle b) const {
  const Node& na = m->pool_[a];
  const Node& nb = m->pool_[b];
  return na.level == nb.level && na.children == nb.children;
}

DdManager::DdManager(std::uint32_t arity)
    : arity_(arity), unique_(16, NodeHash{this}, NodeEq{this}) {
  if (arity == 0) throw ContractViolation("tuple arity must be positive");
  Node terminal;
  terminal.level = arity;
  terminal.live = true;
  terminal.refcount = 1;  // pinned; never released
  pool_.push_back(std::move(terminal));
}

DdHandle DdManager::alloc() {
  if (!free_list_.empty()) {
    DdHandle h = free_list_.back();
    free_list_.pop_back();
    return h;
  }
  pool_.emplace_back();
  return static_cast<DdHandle>(pool_.size() - 1);
}

void DdManager::free_node(DdHandle h) {
  Node& n = pool_[h];
  n.live = false;
  n.children.clear();
  n.refcount = 0;
  free_list_.push_back(h);
}

DdHandle DdManager::intern(
    std::uint32_t level,
    std::vector<std::pair<std::uint32_t, DdHandle>> children) {
  DdHandle h = alloc();
  Node& n = pool_[h];
  n.level = level;
  n.refcount = 0;
  n.live = true;
  n.children = std::move(children);

  auto [it, inserted] = unique_.insert(h);
  if (!inserted) {
    free_node(h);
    return *it;
  }
  for (const auto& [label, child] : pool_[h].children)
    if (child != kTerminal) ++pool_[child].refcount;
  live_edges_ += pool_[h].children.size();
  return h;
}

void DdManager::retain_root(DdHandle h) {
  if (h == kDdEmpty) return;
  ++pool_[h].refcount;
}

void DdManager::release(DdHandle h) {
  if (h == kTerminal) return;
  Node& n = pool_[h];
  if (!n.live || n.refcount == 0)
    throw ContractViolation("release of a dead diagram node (double remove?)");
  if (--n.refcount > 0) return;
  unique_.erase(h);
  live_edges_ -= n.children.size();
  // grab the edge list before the slot is recycled
  std::vector<std::pair<std::uint32_t, DdHandle>> children =
      std::move(n.children);
  free_node(h);
  for (const auto& [label, child] : children) release(child);
}

DdHandle DdManager::create(std::span<const std::uint32_t> tuple) {
  if (tuple.size() != arity_)
    throw ContractViolation("tuple arity mismatch in create");
  DdHandle below = kTerminal;
  for (std::uint32_t level = arity_; level-- > 0;)
    below = intern(level, {{tuple[level], below}});
  retain_root(below);
  return below;
}

DdHandle DdManager::unite_rec(DdHandle a, DdHandle b, bool use_cache) {
  if (a == b) return a;
  std::uint64_t key = 0;
  if (use_cache) {
    std::uint64_t lo = std::min(a, b);
    std::uint64_t hi = std::max(a, b);
    key = (hi << 32) | lo;
    auto it = union_cache_.find(key);
    if (it != union_cache_.end()) return it->second;
  }

  const auto& ca = node(a).children;
  const auto& cb = node(b).children;
  std::vector<std::pair<std::uint32_t, DdHandle>> merged;
  merged.reserve(ca.size() + cb.size());
  std::size_t i = 0, j = 0;
  while (i < ca.size() || j < cb.size()) {
    if (j >= cb.size() || (i < ca.size() && ca[i].first < cb[j].first)) {
      merged.push_back(ca[i++]);
    } else if (i >= ca.size() || cb[j].first < ca[i].first) {
      merged.push_back(cb[j++]);
    } else {
      merged.emplace_back(ca[i].first,
                          unite_rec(ca[i].second, cb[j].second, use_cache));
      ++i;
      ++j;
    }
  }
  DdHandle r = intern(node(a).level, std::move(merged));
  if (use_cache) union_cache_[key] = r;
  return r;
}

DdHandle DdManager::unite(DdHandle a, DdHandle b) {
  ++union_calls_;
  if (a == kDdEmpty) {
    retain_root(b);
    return b;
  }
  if (b == kDdEmpty) {
    retain_root(a);
    return a;
  }
  if (node(a).level != node(b).level)
    throw ContractViolation("union of diagrams at different levels");
  DdHandle r = unite_rec(a, b, /*use_cache=*/true);
  union_cache_.clear();
  retain_root(r);
  return r;
}

DdHandle DdManager::unite_uncached(DdHandle a, DdHandle b) {
  ++union_calls_;
  if (a == kDdEmpty) {
    retain_root(b);
    return b;
  }
  if (b == kDdEmpty) {
    retain_root(a);
    return a;
  }
  if (node(a).level != node(b).level)
    throw ContractViolation("union of diagrams at different levels");
  DdHandle r = unite_rec(a, b, /*use_cache=*/false);
  retain_root(r);
  return r;
}

DdHandle DdManager::compress_rec(const Mdt& tree, std::uint32_t mdt_node,
                                 std::uint32_t level) {
  const auto& children = tree.nodes()[mdt_node].children;
  std::vector<std::pair<std::uint32_t, DdHandle>> edges;
  edges.reserve(children.size());
  for (const auto& [label, child] : children) {
    DdHandle below = (child == Mdt::kTerminal)
                         ? kTerminal
                         : compress_rec(tree, child, level + 1);
    edges.emplace_back(label, below);
  }
  return intern(level, std::move(edges));
}

DdHandle DdManager::compress(const Mdt& tree) {
  if (tree.arity() != arity_)
    throw ContractViolation("tuple arity mismatch in compress");
  if (tree.path_count() == 0) return kDdEmpty;
  DdHandle r = compress_rec(tree, 0, 0);
  retain_root(r);
  return r;
}

bool DdManager::contains(DdHandle d,
                         std::span<const std::uint32_t> tuple) const {
  if (tuple.size() != arity_)
    throw ContractViolation("tuple arity mismatch in contains");
  if (d == kDdEmpty) return false;
  DdHandle at = d;
  for (std::uint32_t level = 0; level < arity_; ++level) {
    const auto& ch = node(at).children;
    auto it = std::lower_bound(ch.begin(), ch.end(), tuple[level],
                               [](const auto& e, std::uint32_t l) {
                                 return e.first < l;
                               });
    if (it == ch.end() || it->first != tuple[level]) return false;
    at = it->second;
  }
  return at == kTerminal;
}

void DdManager::remove(DdHandle d) {
  if (d == kDdEmpty) return;
  if (d >= pool_.size() || !pool_[d].live)
    throw ContractViolation("remove of a dead diagram handle");
  release(d);
}

DdManager::Stats DdManager::stats(DdHandle d) const {
  Stats s;
  s.live_nodes = unique_.size();
  if (d == kDdEmpty) return s;

  std::unordered_map<DdHandle, std::size_t> path_memo;
  std::vector<DdHandle> stack = {d};
  std::unordered_set<DdHandle> seen = {d};
  while (!stack.empty()) {
    DdHandle h = stack.back();
    stack.pop_back();
    ++s.reachable_nodes;
    for (const auto& [label, child] : node(h).children)
      if (child != kTerminal && seen.insert(child).second)
        stack.push_back(child);
  }

  // path count by memoized DAG traversal
  struct Counter {
    const DdManager* m;
    std::unordered_map<DdHandle, std::size_t>& memo;
    std::size_t count(DdHandle h) {
      if (h == kTerminal) return 1;
      auto it = memo.find(h);
      if (it != memo.end()) return it->second;
      std::size_t total = 0;
      for (const auto& [label, child] : m->node(h).children)
        total += count(child);
      memo.emplace(h, total);
      return total;
    }
  };
  Counter counter{this, path_memo};
  s.paths = counter.count(d);
  return s;
}

std::string DdManager::dump(DdHandle d) const {
  if (d == kDdEmpty) return "empty\n";

  // depth-first renumbering with ascending labels; emit in id order so the
  // root is n0 and the text is independent of pool indices
  std::unordered_map<DdHandle, std::size_t> ids;
  std::vector<DdHandle> order;
  struct Walker {
    const DdManager* m;
    std::unordered_map<DdHandle, std::size_t>& ids;
    std::vector<DdHandle>& order;
    void visit(DdHandle h) {
      if (!ids.emplace(h, order.size()).second) return;
      order.push_back(h);
      for (const auto& [label, child] : m->node(h).children)
        if (child != kTerminal) visit(child);
    }
  };
  Walker w{this, ids, order};
  w.visit(d);

  std::string out;
  for (DdHandle h : order) {
    out += "n" + std::to_string(ids.at(h)) + " L" +
           std::to_string(node(h).level) + ":";
    for (const auto& [label, child] : node(h).children)
      out += " " + std::to_string(label) + "->" +
             (child == kTerminal ? std::string("T")
                                 : "n" + std::to_string(ids.at(child)));
    out += '\n';
  }
  return out;
}

}  // namespace lpnreach

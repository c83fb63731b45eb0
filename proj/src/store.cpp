#include "lpnreach/store.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_set>
#include <vector>

#include "lpnreach/mdd.hpp"
#include "lpnreach/mdt.hpp"

namespace lpnreach {

namespace {

void append_number(std::string& out, std::uint64_t v) {
  char buf[24];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  out.append(buf, p);
}

void append_tuple_line(std::string& out, std::span<const std::uint32_t> t) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out.push_back(' ');
    append_number(out, t[i]);
  }
  out.push_back('\n');
}

// Emits every path of the trie in ascending label order, one line each.
std::string dump_tree_paths(const Mdt& tree) {
  std::string out;
  std::vector<std::uint32_t> path(tree.arity());
  struct Frame {
    std::uint32_t node;
    std::size_t next_edge;
  };
  if (tree.path_count() == 0) return out;
  std::vector<Frame> stack;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    const Mdt::Node& n = tree.nodes()[f.node];
    if (f.next_edge == n.children.size()) {
      stack.pop_back();
      continue;
    }
    auto [label, child] = n.children[f.next_edge++];
    path[stack.size() - 1] = label;
    if (child == Mdt::kTerminal) {
      append_tuple_line(out, path);
    } else {
      stack.push_back({child, 0});
    }
  }
  return out;
}

std::uint64_t tree_bytes(const Mdt& tree) {
  Mdt::Stats s = tree.stats();
  return std::uint64_t{32} * tree.nonterminal_nodes() +
         std::uint64_t{16} * s.edges;
}

class HashStore final : public StateStore {
 public:
  explicit HashStore(std::uint32_t arity) : arity_(arity) {}

  bool add_if_new(const GlobalState& g) override {
    check(g);
    return set_.insert(g).second;
  }

  bool contains(const GlobalState& g) const override {
    check(g);
    return set_.count(g) > 0;
  }

  std::uint64_t size() const override { return set_.size(); }

  void finalize() override {}

  StoreReport report() const override {
    StoreReport r;
    r.kind = "hash";
    r.states = set_.size();
    r.entries = set_.size();
    r.estimated_bytes = r.entries * (std::uint64_t{4} * arity_ + 32);
    r.peak_estimated_bytes = r.estimated_bytes;  // only ever grows
    return r;
  }

  std::string dump() const override {
    std::vector<GlobalState> all(set_.begin(), set_.end());
    std::sort(all.begin(), all.end());
    std::string out;
    for (const GlobalState& g : all) append_tuple_line(out, g);
    return out;
  }

  std::string_view kind() const override { return "hash"; }

 private:
  void check(const GlobalState& g) const {
    if (g.size() != arity_)
      throw ContractViolation("tuple arity mismatch in store");
  }

  std::uint32_t arity_;
  std::unordered_set<GlobalState, GlobalStateHash> set_;
};

class MdtStore final : public StateStore {
 public:
  explicit MdtStore(std::uint32_t arity) : tree_(arity) {}

  bool add_if_new(const GlobalState& g) override { return tree_.add(g); }

  bool contains(const GlobalState& g) const override {
    return tree_.contains(g);
  }

  std::uint64_t size() const override { return tree_.path_count(); }

  void finalize() override {}

  StoreReport report() const override {
    StoreReport r;
    r.kind = "mdt";
    r.states = tree_.path_count();
    r.nodes = tree_.nonterminal_nodes();
    r.edges = tree_.stats().edges;
    r.estimated_bytes = tree_bytes(tree_);
    r.peak_estimated_bytes = r.estimated_bytes;  // only ever grows
    return r;
  }

  std::string dump() const override { return dump_tree_paths(tree_); }

  std::string_view kind() const override { return "mdt"; }

 private:
  Mdt tree_;
};

class MddStore final : public StateStore {
 public:
  explicit MddStore(std::uint32_t arity) : dd_(arity) {}

  ~MddStore() override { dd_.remove(main_); }

  bool add_if_new(const GlobalState& g) override {
    if (dd_.contains(main_, g)) return false;
    DdHandle single = dd_.create(g);
    DdHandle next = dd_.unite(main_, single);
    dd_.remove(single);
    dd_.remove(main_);
    main_ = next;
    ++states_;
    peak_ = std::max(peak_, current_bytes());
    return true;
  }

  bool contains(const GlobalState& g) const override {
    return dd_.contains(main_, g);
  }

  std::uint64_t size() const override { return states_; }

  void finalize() override {}

  StoreReport report() const override {
    StoreReport r;
    r.kind = "mdd";
    r.states = states_;
    r.nodes = dd_.live_nodes();
    r.edges = dd_.live_edges();
    r.estimated_bytes = current_bytes();
    r.peak_estimated_bytes = std::max(peak_, r.estimated_bytes);
    r.unions = dd_.union_calls();
    return r;
  }

  std::string dump() const override { return dd_.dump(main_); }

  std::string_view kind() const override { return "mdd"; }

 private:
  std::uint64_t current_bytes() const {
    return std::uint64_t{48} * dd_.live_nodes() +
           std::uint64_t{8} * dd_.live_edges();
  }

  DdManager dd_;
  DdHandle main_ = kDdEmpty;
  std::uint64_t states_ = 0;
  std::uint64_t peak_ = 0;
};

class HybridStore final : public StateStore {
 public:
  HybridStore(std::uint32_t arity, std::uint64_t threshold)
      : buffer_(arity), dd_(arity), threshold_(threshold) {}

  ~HybridStore() override { dd_.remove(main_); }

  bool add_if_new(const GlobalState& g) override {
    if (dd_.contains(main_, g)) return false;
    if (!buffer_.add(g)) return false;
    ++states_;
    if (buffer_.path_count() >= threshold_) flush();
    peak_ = std::max(peak_, current_bytes());
    return true;
  }

  bool contains(const GlobalState& g) const override {
    return dd_.contains(main_, g) || buffer_.contains(g);
  }

  std::uint64_t size() const override { return states_; }

  void finalize() override { flush(); }

  StoreReport report() const override {
    StoreReport r;
    r.kind = "hybrid";
    r.states = states_;
    r.nodes = dd_.live_nodes() + buffer_.nonterminal_nodes();
    r.edges = dd_.live_edges() + buffer_.stats().edges;
    r.estimated_bytes = current_bytes();
    r.peak_estimated_bytes = std::max(peak_, r.estimated_bytes);
    r.flushes = flushes_;
    r.unions = dd_.union_calls();
    return r;
  }

  std::string dump() const override {
    std::string out = "main:\n";
    out += dd_.dump(main_);
    if (buffer_.path_count() > 0) {
      out += "buffer:\n";
      out += dump_tree_paths(buffer_);
    }
    return out;
  }

  std::string_view kind() const override { return "hybrid"; }

 private:
  std::uint64_t current_bytes() const {
    return tree_bytes(buffer_) + std::uint64_t{48} * dd_.live_nodes() +
           std::uint64_t{8} * dd_.live_edges();
  }

  void flush() {
    if (buffer_.path_count() == 0) return;
    DdHandle compressed = dd_.compress(buffer_);
    DdHandle next = dd_.unite(main_, compressed);
    // widest point of the cycle: buffer, both inputs, and the result live
    peak_ = std::max(peak_, current_bytes());
    dd_.remove(compressed);
    dd_.remove(main_);
    main_ = next;
    buffer_.clear();
    ++flushes_;
  }

  Mdt buffer_;
  DdManager dd_;
  DdHandle main_ = kDdEmpty;
  std::uint64_t threshold_;
  std::uint64_t states_ = 0;
  std::uint64_t peak_ = 0;
  std::uint64_t flushes_ = 0;
};

}  // namespace

std::unique_ptr<StateStore> make_store(std::string_view kind,
                                       std::uint32_t arity,
                                       std::uint64_t flush_threshold) {
  if (kind == "hash") return std::make_unique<HashStore>(arity);
  if (kind == "mdt") return std::make_unique<MdtStore>(arity);
  if (kind == "mdd") return std::make_unique<MddStore>(arity);
  if (kind == "hybrid") {
    if (flush_threshold == 0)
      throw ModelError("hybrid store needs a positive flush threshold");
    return std::make_unique<HybridStore>(arity, flush_threshold);
  }
  throw ModelError("unknown store kind: " + std::string(kind) +
                   " (expected hash, mdt, mdd, or hybrid)");
}

}  // namespace lpnreach

#include "lpnreach/state_space.hpp"

#include <algorithm>

namespace lpnreach {

std::uint32_t LocalStateTable::intern(const ModuleConfig& ls) {
  auto [it, inserted] =
      index_.try_emplace(ls, static_cast<std::uint32_t>(by_index_.size()));
  if (inserted) by_index_.push_back(&it->first);
  return it->second;
}

GlobalState StateTables::initial_global() {
  GlobalState g;
  g.reserve(tables_.size());
  Config c = sys_->initial_config();
  for (std::size_t i = 0; i < tables_.size(); ++i)
    g.push_back(tables_[i].intern(c[i]));
  return g;
}

Config StateTables::config_of(const GlobalState& g) const {
  if (g.size() != tables_.size())
    throw ContractViolation("global state arity mismatch");
  Config c;
  c.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    c.push_back(tables_[i].lookup(g[i]));
  return c;
}

GlobalState StateTables::successor(const GlobalState& g, const Config& c,
                                   std::uint32_t t) {
  const Transition& tr = sys_->transitions()[t];
  if (tr.touched_modules.empty()) return g;

  // Copy only the module slices this transition can change.
  std::vector<ModuleConfig> next;
  next.reserve(tr.touched_modules.size());
  for (std::uint32_t mod : tr.touched_modules) next.push_back(c[mod]);
  return apply_and_intern(g, tr, std::move(next));
}

GlobalState StateTables::successor(const GlobalState& g, std::uint32_t t) {
  const Transition& tr = sys_->transitions()[t];
  if (tr.touched_modules.empty()) return g;

  std::vector<ModuleConfig> next;
  next.reserve(tr.touched_modules.size());
  for (std::uint32_t mod : tr.touched_modules)
    next.push_back(tables_[mod].lookup(g[mod]));
  return apply_and_intern(g, tr, std::move(next));
}

GlobalState StateTables::apply_and_intern(const GlobalState& g,
                                          const Transition& tr,
                                          std::vector<ModuleConfig> next) {
  auto slice = [&](std::uint32_t mod) -> ModuleConfig& {
    auto it = std::lower_bound(tr.touched_modules.begin(),
                               tr.touched_modules.end(), mod);
    return next[static_cast<std::size_t>(it - tr.touched_modules.begin())];
  };

  if (tr.moves_tokens) {
    std::vector<std::uint32_t>& m = slice(tr.module).marking;
    std::vector<std::uint32_t> removed;
    removed.reserve(m.size());
    std::set_difference(m.begin(), m.end(), tr.preset.begin(),
                        tr.preset.end(), std::back_inserter(removed));
    std::vector<std::uint32_t> merged;
    merged.reserve(removed.size() + tr.postset.size());
    std::set_union(removed.begin(), removed.end(), tr.postset.begin(),
                   tr.postset.end(), std::back_inserter(merged));
    m = std::move(merged);
  }

  if (!tr.assigns.empty()) {
    // Right-hand sides all see the pre-fire values: nothing below mutates
    // values until every rhs has been evaluated.
    const ModuleConfig& pre = slice(tr.module);
    std::vector<std::int64_t> rhs_values;
    rhs_values.reserve(tr.assigns.size());
    for (const Assign& a : tr.assigns) {
      try {
        rhs_values.push_back(
            a.rhs.eval_num(std::span<const std::int64_t>(pre.values)));
      } catch (const EvalError& e) {
        throw EvalError("transition " + tr.id + ": " + e.what());
      }
    }
    for (std::size_t i = 0; i < tr.assigns.size(); ++i)
      for (auto [mod, vslot] : sys_->variables()[tr.assigns[i].var].owners)
        slice(mod).values[vslot] = rhs_values[i];
  }

  GlobalState out = g;
  for (std::size_t k = 0; k < tr.touched_modules.size(); ++k)
    out[tr.touched_modules[k]] = tables_[tr.touched_modules[k]].intern(next[k]);
  return out;
}

std::size_t StateTables::interned_states() const {
  std::size_t n = 0;
  for (const LocalStateTable& t : tables_) n += t.size();
  return n;
}

std::size_t StateTables::interned_bytes() const {
  std::size_t bytes = 0;
  for (std::size_t mi = 0; mi < tables_.size(); ++mi) {
    const LocalStateTable& t = tables_[mi];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const ModuleConfig& mc = t.lookup(static_cast<std::uint32_t>(i));
      bytes += 16 + 4 * mc.marking.size() + 8 * mc.values.size();
    }
  }
  return bytes;
}

std::string StateTables::dump() const {
  std::string out;
  for (std::size_t mi = 0; mi < tables_.size(); ++mi) {
    const ModuleInfo& info = sys_->modules()[mi];
    const LocalStateTable& t = tables_[mi];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const ModuleConfig& mc = t.lookup(static_cast<std::uint32_t>(i));
      out += info.name;
      out += '/';
      out += std::to_string(i);
      out += " -> {";
      for (std::size_t k = 0; k < mc.marking.size(); ++k) {
        if (k) out += ',';
        out += info.places[mc.marking[k]];
      }
      out += "}";
      if (!mc.values.empty()) {
        out += " (";
        for (std::size_t k = 0; k < mc.values.size(); ++k) {
          if (k) out += ", ";
          out += info.vars[k];
          out += '=';
          out += std::to_string(mc.values[k]);
        }
        out += ')';
      }
      out += '\n';
    }
  }
  return out;
}

}  // namespace lpnreach

#include "lpnreach/model.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "lpnreach/errors.hpp"

namespace lpnreach {

namespace {

std::vector<std::uint32_t> sorted_unique(std::vector<std::uint32_t> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Resolves place names to sorted local ids, rejecting unknowns and
// duplicates.
std::vector<std::uint32_t> resolve_places(
    const std::vector<std::string>& names,
    const std::unordered_map<std::string, std::uint32_t>& place_ids,
    const std::string& context) {
  std::vector<std::uint32_t> out;
  out.reserve(names.size());
  for (const std::string& n : names) {
    auto it = place_ids.find(n);
    if (it == place_ids.end())
      throw ModelError(context + ": unknown place '" + n + "'");
    out.push_back(it->second);
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw ModelError(context + ": duplicate place");
  return out;
}

void check_vars_known(const Expr& e,
                      const std::unordered_set<std::string>& module_vars,
                      const std::string& context) {
  for (const std::string& v : e.vars()) {
    if (!module_vars.count(v))
      throw ModelError(context + ": references unknown variable '" + v + "'");
  }
}

}  // namespace

Config LpnSystem::initial_config() const {
  Config c;
  c.reserve(modules_.size());
  for (const ModuleInfo& m : modules_) {
    ModuleConfig mc;
    mc.marking = m.initial_marking;
    mc.values = m.var_init;
    c.push_back(std::move(mc));
  }
  return c;
}

std::uint32_t LpnSystem::transition_index(
    const std::string& qualified_id) const {
  for (std::size_t i = 0; i < transitions_.size(); ++i)
    if (transitions_[i].id == qualified_id)
      return static_cast<std::uint32_t>(i);
  throw ModelError("no transition named '" + qualified_id + "'");
}

LpnSystem compose(const std::vector<ModuleDef>& modules) {
  if (modules.empty()) throw ModelError("system has no modules");

  LpnSystem sys;
  std::unordered_set<std::string> module_names;
  std::unordered_set<std::string> all_places;
  std::unordered_map<std::string, std::uint32_t> var_ids;

  for (std::size_t mi = 0; mi < modules.size(); ++mi) {
    const ModuleDef& def = modules[mi];
    const std::string& mname = def.name;
    if (mname.empty()) throw ModelError("module with empty name");
    if (!module_names.insert(mname).second)
      throw ModelError("duplicate module name '" + mname + "'");

    ModuleInfo info;
    info.name = mname;

    std::unordered_map<std::string, std::uint32_t> place_ids;
    for (const std::string& p : def.places) {
      if (!place_ids.emplace(p, static_cast<std::uint32_t>(info.places.size()))
               .second)
        throw ModelError("module '" + mname + "': duplicate place '" + p +
                         "'");
      if (!all_places.insert(p).second)
        throw ModelError("place '" + p +
                         "' is declared by two modules; place sets must be "
                         "disjoint");
      info.places.push_back(p);
    }

    std::unordered_set<std::string> module_vars;
    for (const VarDef& v : def.vars) {
      if (!module_vars.insert(v.name).second)
        throw ModelError("module '" + mname + "': duplicate variable '" +
                         v.name + "'");
      std::uint32_t slot = static_cast<std::uint32_t>(info.vars.size());
      info.vars.push_back(v.name);
      info.var_init.push_back(v.init);

      auto it = var_ids.find(v.name);
      if (it == var_ids.end()) {
        std::uint32_t gid = static_cast<std::uint32_t>(sys.variables_.size());
        var_ids.emplace(v.name, gid);
        GlobalVar gv;
        gv.name = v.name;
        gv.init = v.init;
        gv.owners.emplace_back(static_cast<std::uint32_t>(mi), slot);
        sys.variables_.push_back(std::move(gv));
      } else {
        GlobalVar& gv = sys.variables_[it->second];
        if (gv.init != v.init)
          throw ModelError(
              "shared variable '" + v.name +
              "' has inconsistent initial values (" + std::to_string(gv.init) +
              " vs " + std::to_string(v.init) + " in module '" + mname + "')");
        gv.owners.emplace_back(static_cast<std::uint32_t>(mi), slot);
      }
    }

    info.initial_marking = sorted_unique(
        resolve_places(def.initial_marking, place_ids,
                       "module '" + mname + "' initial marking"));

    std::unordered_set<std::string> trans_names;
    for (const TransitionDef& td : def.transitions) {
      if (!trans_names.insert(td.name).second)
        throw ModelError("module '" + mname + "': duplicate transition '" +
                         td.name + "'");
      Transition t;
      t.id = mname + "." + td.name;
      t.module = static_cast<std::uint32_t>(mi);
      if (td.preset.empty())
        throw ModelError("transition " + t.id + ": empty preset");
      if (td.postset.empty())
        throw ModelError("transition " + t.id + ": empty postset");
      t.preset = resolve_places(td.preset, place_ids, "transition " + t.id);
      t.postset = resolve_places(td.postset, place_ids, "transition " + t.id);
      t.moves_tokens = t.preset != t.postset;

      Expr guard = td.guard.empty() ? parse_boolean("true")
                                    : parse_boolean(td.guard);
      check_vars_known(guard, module_vars, "transition " + t.id + " guard");
      t.guard = guard.bind(info.vars);

      std::unordered_set<std::string> assigned;
      for (const AssignDef& ad : td.assigns) {
        if (!module_vars.count(ad.var))
          throw ModelError("transition " + t.id +
                           ": assignment to unknown variable '" + ad.var +
                           "'");
        if (!assigned.insert(ad.var).second)
          throw ModelError("transition " + t.id + ": variable '" + ad.var +
                           "' assigned twice");
        Expr rhs = parse_numeric(ad.rhs);
        check_vars_known(rhs, module_vars,
                         "transition " + t.id + " assignment to '" + ad.var +
                             "'");
        Assign a;
        a.var = var_ids.at(ad.var);
        a.rhs = rhs.bind(info.vars);
        t.assigns.push_back(std::move(a));
      }

      info.transitions.push_back(
          static_cast<std::uint32_t>(sys.transitions_.size()));
      sys.transitions_.push_back(std::move(t));
    }

    sys.modules_.push_back(std::move(info));
  }

  // touched_modules needs the complete owner lists, so fill it in last.
  for (Transition& t : sys.transitions_) {
    std::vector<std::uint32_t> touched;
    if (t.moves_tokens) touched.push_back(t.module);
    for (const Assign& a : t.assigns)
      for (auto [mod, slot] : sys.variables_[a.var].owners)
        touched.push_back(mod);
    t.touched_modules = sorted_unique(std::move(touched));
  }

  return sys;
}

bool is_enabled(const LpnSystem& sys, std::uint32_t t, const Config& c) {
  const Transition& tr = sys.transitions()[t];
  const ModuleConfig& mc = c[tr.module];
  if (!std::includes(mc.marking.begin(), mc.marking.end(), tr.preset.begin(),
                     tr.preset.end()))
    return false;
  try {
    return tr.guard.eval_bool(std::span<const std::int64_t>(mc.values));
  } catch (const EvalError& e) {
    throw EvalError("transition " + tr.id + ": " + e.what());
  }
}

std::vector<std::uint32_t> enabled_local(const LpnSystem& sys,
                                         std::uint32_t module,
                                         const Config& c) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t ti : sys.modules()[module].transitions)
    if (is_enabled(sys, ti, c)) out.push_back(ti);
  return out;
}

std::vector<std::uint32_t> enabled_global(const LpnSystem& sys,
                                          const Config& c) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t ti = 0; ti < sys.transitions().size(); ++ti)
    if (is_enabled(sys, ti, c)) out.push_back(ti);
  return out;
}

Config fire(const LpnSystem& sys, std::uint32_t t, const Config& c) {
  const Transition& tr = sys.transitions()[t];
  if (!is_enabled(sys, t, c))
    throw ContractViolation("firing disabled transition " + tr.id);

  Config out = c;

  if (tr.moves_tokens) {
    const std::vector<std::uint32_t>& m = c[tr.module].marking;
    std::vector<std::uint32_t> next;
    next.reserve(m.size() + tr.postset.size());
    std::set_difference(m.begin(), m.end(), tr.preset.begin(), tr.preset.end(),
                        std::back_inserter(next));
    std::vector<std::uint32_t> merged;
    merged.reserve(next.size() + tr.postset.size());
    std::set_union(next.begin(), next.end(), tr.postset.begin(),
                   tr.postset.end(), std::back_inserter(merged));
    out[tr.module].marking = std::move(merged);
  }

  if (!tr.assigns.empty()) {
    // Right-hand sides see the pre-fire values; writes land afterwards, so
    // a:=b, b:=a swaps.
    const ModuleConfig& pre = c[tr.module];
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
      for (auto [mod, slot] : sys.variables()[tr.assigns[i].var].owners)
        out[mod].values[slot] = rhs_values[i];
  }

  return out;
}

}  // namespace lpnreach

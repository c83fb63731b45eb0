#ifndef LPNREACH_MODEL_HPP
#define LPNREACH_MODEL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lpnreach/expr.hpp"

namespace lpnreach {

// ---------------------------------------------------------------------------
// Raw definitions, as produced by the file parser or the model generators.
// compose() validates them and builds the immutable compiled system.
// ---------------------------------------------------------------------------

struct VarDef {
  std::string name;
  std::int64_t init = 0;
};

struct AssignDef {
  std::string var;
  std::string rhs;  // numeric expression text
};

struct TransitionDef {
  std::string name;
  std::vector<std::string> preset;
  std::vector<std::string> postset;
  std::string guard;  // boolean expression text; empty means true
  std::vector<AssignDef> assigns;
};

struct ModuleDef {
  std::string name;
  std::vector<VarDef> vars;
  std::vector<std::string> places;
  std::vector<std::string> initial_marking;
  std::vector<TransitionDef> transitions;
};

// ---------------------------------------------------------------------------
// Compiled system.
// ---------------------------------------------------------------------------

// One module's slice of a configuration: which local places are marked and
// the values of the module's variables (shared variables appear as the
// module's own copy). Markings are kept sorted so equality is structural.
struct ModuleConfig {
  std::vector<std::uint32_t> marking;     // sorted local place ids
  std::vector<std::int64_t> values;       // indexed by local variable slot
  bool operator==(const ModuleConfig&) const = default;
};

using Config = std::vector<ModuleConfig>;

struct Assign {
  std::uint32_t var;  // global variable id
  Expr rhs;           // bound to the owning module's variable frame
};

struct Transition {
  std::string id;  // qualified "module.name"
  std::uint32_t module = 0;
  std::vector<std::uint32_t> preset;   // sorted local place ids
  std::vector<std::uint32_t> postset;  // sorted local place ids
  Expr guard;                          // bound to the owning module's frame
  std::vector<Assign> assigns;
  bool moves_tokens = false;  // preset != postset
  // Modules whose local state can change when this fires: the owner if
  // tokens move, plus every module owning a copy of an assigned variable.
  std::vector<std::uint32_t> touched_modules;
};

struct ModuleInfo {
  std::string name;
  std::vector<std::string> places;  // local place id = position
  std::vector<std::string> vars;    // local variable slot = position
  std::vector<std::int64_t> var_init;
  std::vector<std::uint32_t> initial_marking;  // sorted local place ids
  std::vector<std::uint32_t> transitions;      // global indices, declaration order
};

// A variable together with every (module, slot) holding a copy of it.
// Variables declared by several modules are the only coupling between
// modules; places are module-private by construction.
struct GlobalVar {
  std::string name;
  std::int64_t init = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> owners;
};

class LpnSystem {
 public:
  const std::vector<ModuleInfo>& modules() const { return modules_; }
  const std::vector<Transition>& transitions() const { return transitions_; }
  const std::vector<GlobalVar>& variables() const { return variables_; }

  std::size_t module_count() const { return modules_.size(); }

  Config initial_config() const;

  // Resolves "module.transition"; returns the global index or throws
  // ModelError.
  std::uint32_t transition_index(const std::string& qualified_id) const;

 private:
  friend LpnSystem compose(const std::vector<ModuleDef>& modules);
  std::vector<ModuleInfo> modules_;
  std::vector<Transition> transitions_;
  std::vector<GlobalVar> variables_;
};

// Validates the definitions and compiles them. Throws ModelError on: empty
// module list, duplicate module names, duplicate place/variable/transition
// names within a module, a place declared by two modules, inconsistent
// initial values of a shared variable, empty presets or postsets, unknown
// places or variables, double assignment within one transition. Throws
// ParseError for malformed guard or assignment expressions.
LpnSystem compose(const std::vector<ModuleDef>& modules);

// Definition of enabledness: preset marked and guard true.
bool is_enabled(const LpnSystem& sys, std::uint32_t t, const Config& c);

// Global transition indices of the module's enabled transitions, in
// declaration order.
std::vector<std::uint32_t> enabled_local(const LpnSystem& sys,
                                         std::uint32_t module,
                                         const Config& c);

// All enabled transitions of the system in ascending (module, declaration)
// order, which is also ascending global index order.
std::vector<std::uint32_t> enabled_global(const LpnSystem& sys,
                                          const Config& c);

// Fires an enabled transition: the owner's marking becomes (M \ preset) ∪
// postset; every assignment right-hand side is evaluated against the
// pre-fire values, then all copies of the assigned variables are updated at
// once. Pure: returns the new configuration. Firing a disabled transition is
// a ContractViolation; evaluation failures surface as EvalError tagged with
// the transition id.
Config fire(const LpnSystem& sys, std::uint32_t t, const Config& c);

}  // namespace lpnreach

#endif

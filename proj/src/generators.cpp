#include "lpnreach/generators.hpp"

#include <string>

namespace lpnreach {

namespace {

std::string num(std::uint32_t i) { return std::to_string(i); }

}  // namespace

std::vector<ModuleDef> toggle_chain_defs(std::uint32_t n) {
  if (n < 1) throw ModelError("toggle_chain needs n >= 1");
  std::vector<ModuleDef> defs;
  defs.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string p = "p" + num(i);
    std::string x = "x" + num(i);
    ModuleDef m;
    m.name = "T" + num(i);
    m.vars = {{x, 0}};
    m.places = {p};
    m.initial_marking = {p};
    m.transitions = {
        {"up", {p}, {p}, x + " == 0", {{x, "1"}}},
        {"down", {p}, {p}, x + " == 1", {{x, "0"}}},
    };
    defs.push_back(std::move(m));
  }
  return defs;
}

std::vector<ModuleDef> philosophers_defs(std::uint32_t n) {
  if (n < 2) throw ModelError("philosophers needs n >= 2");
  std::vector<ModuleDef> defs;
  defs.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string left = "fork" + num(i);
    std::string right = "fork" + num((i + 1) % n);
    std::string thinking = "thinking" + num(i);
    std::string hasleft = "hasleft" + num(i);
    std::string eating = "eating" + num(i);
    ModuleDef m;
    m.name = "Phil" + num(i);
    m.vars = {{left, 1}, {right, 1}};
    m.places = {thinking, hasleft, eating};
    m.initial_marking = {thinking};
    m.transitions = {
        {"takeL",
         {thinking},
         {hasleft},
         left + " == 1",
         {{left, "0"}}},
        {"takeR",
         {hasleft},
         {eating},
         right + " == 1",
         {{right, "0"}}},
        {"release",
         {eating},
         {thinking},
         "",
         {{left, "1"}, {right, "1"}}},
    };
    defs.push_back(std::move(m));
  }
  return defs;
}

std::vector<ModuleDef> ring_arbiter_defs(std::uint32_t n) {
  if (n < 1) throw ModelError("ring_arbiter needs n >= 1");
  std::vector<ModuleDef> defs;
  defs.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::string own_slot = "slot" + num(i);
    std::string next_slot = "slot" + num((i + 1) % n);
    std::string idle = "idle" + num(i);
    std::string req = "req" + num(i);
    std::string own = "own" + num(i);
    ModuleDef m;
    m.name = "Arb" + num(i);
    m.vars = {{own_slot, i == 0 ? 1 : 0}};
    if (n > 1) m.vars.push_back({next_slot, i + 1 == n ? 1 : 0});
    m.places = {idle, req, own};
    m.initial_marking = {idle};
    m.transitions = {
        {"request", {idle}, {req}, "", {}},
        {"acquire", {req}, {own}, own_slot + " == 1", {{own_slot, "0"}}},
        {"release", {own}, {idle}, "", {{next_slot, "1"}}},
    };
    defs.push_back(std::move(m));
  }
  return defs;
}

LpnSystem generate_model(std::string_view family, std::uint32_t n) {
  if (family == "toggle_chain") return compose(toggle_chain_defs(n));
  if (family == "philosophers") return compose(philosophers_defs(n));
  if (family == "ring_arbiter") return compose(ring_arbiter_defs(n));
  throw ModelError("unknown model family: " + std::string(family) +
                   " (expected toggle_chain, philosophers, or ring_arbiter)");
}

}  // namespace lpnreach

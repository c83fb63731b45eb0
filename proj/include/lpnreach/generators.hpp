#ifndef LPNREACH_GENERATORS_HPP
#define LPNREACH_GENERATORS_HPP

#include <cstdint>
#include <string_view>
#include <vector>

#include "lpnreach/model.hpp"

namespace lpnreach {

// Built-in parametric families. Raw definitions are exposed so tests can
// inspect or re-compose them; generate_model composes and validates.
//
//   toggle_chain(n)  n >= 1: n independent single-place modules, each
//                    flipping a private bit. 2^n reachable states.
//   philosophers(n)  n >= 2: dining philosophers; phil i guards its left
//                    fork variable fork_i and right fork fork_{(i+1) mod n}
//                    (1 = free). Deadlocks are reachable and fine.
//   ring_arbiter(n)  n >= 1: one grant token circulating through shared
//                    slot variables; station i is idle, requesting, or
//                    owning. 3n * 2^(n-1) reachable states.
std::vector<ModuleDef> toggle_chain_defs(std::uint32_t n);
std::vector<ModuleDef> philosophers_defs(std::uint32_t n);
std::vector<ModuleDef> ring_arbiter_defs(std::uint32_t n);

LpnSystem generate_model(std::string_view family, std::uint32_t n);

}  // namespace lpnreach

#endif

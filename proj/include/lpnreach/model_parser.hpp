#ifndef LPNREACH_MODEL_PARSER_HPP
#define LPNREACH_MODEL_PARSER_HPP

#include <string>
#include <string_view>
#include <vector>

#include "lpnreach/model.hpp"

namespace lpnreach {

// Line-oriented model file format; see docs/model-format.md. Sections start
// with `module <name>`; inside a module:
//
//   var <id> = <int>
//   place <id> [marked]
//   trans <id> : {<preset>} -> {<postset>} [guard <bool-expr>]
//         [assign <id> := <num-expr> {, <id> := <num-expr>}]
//
// `#` starts a comment. The directive words (module, var, place, trans,
// guard, assign, marked) are reserved and cannot name variables or places.
// Syntax errors throw ParseError carrying the 1-based line number.
std::vector<ModuleDef> parse_model_defs(std::string_view text);

// parse_model_defs + compose.
LpnSystem parse_model(std::string_view text);

// Reads the file and parses it; ModelError if the file cannot be read.
LpnSystem load_model_file(const std::string& path);

}  // namespace lpnreach

#endif

#ifndef LPNREACH_EXPR_HPP
#define LPNREACH_EXPR_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lpnreach/errors.hpp"

namespace lpnreach {

// Name-keyed variable assignment, used by the standalone evaluation entry
// points. The fast path inside the search evaluates against a value array
// indexed by variable slot instead (see Expr::eval_num below).
using Valuation = std::map<std::string, std::int64_t>;

enum class ExprKind : std::uint8_t {
  // numeric
  kConst,
  kVar,
  kNeg,
  kAdd,
  kSub,
  kMul,
  kDiv,
  kPow,
  kMod,
  kBitNot,
  kBitOr,
  kBitAnd,
  kBitXor,
  kIntOfBool,
  // boolean
  kTrue,
  kFalse,
  kTruthyVar,  // integer variable read as "nonzero"
  kNot,
  kAnd,
  kOr,
  kEq,
  kGe,
  kGt,
  kLe,
  kLt,
};

struct ExprNode {
  ExprKind kind;
  std::int64_t value = 0;  // kConst
  std::uint32_t var = 0;   // kVar / kTruthyVar: index into vars()
  std::uint32_t lhs = 0;
  std::uint32_t rhs = 0;
};

// Immutable expression AST over 64-bit signed integers. Numeric and Boolean
// formulas share one node pool; boolean() tells which kind the root is.
// Arithmetic is checked: overflow, division by zero, modulus by zero and
// negative exponents raise EvalError instead of producing a value.
class Expr {
 public:
  Expr() = default;

  bool valid() const { return !nodes_.empty(); }
  bool boolean() const { return boolean_; }

  // Distinct variable names, in first-occurrence order (or the bound frame).
  const std::vector<std::string>& vars() const { return vars_; }

  // Slot-keyed evaluation: values[i] is the value of vars()[i].
  std::int64_t eval_num(std::span<const std::int64_t> values) const;
  bool eval_bool(std::span<const std::int64_t> values) const;

  // Name-keyed evaluation. Every variable of the expression must be present.
  std::int64_t eval_num(const Valuation& v) const;
  bool eval_bool(const Valuation& v) const;

  // Remaps variable indices onto an external frame so the expression can be
  // evaluated against value arrays laid out by the frame's order. Throws
  // ModelError if a variable is missing from the frame.
  Expr bind(const std::vector<std::string>& frame) const;

  // Concrete syntax, fully parenthesized; reparsing yields an equal AST.
  std::string str() const;

  const std::vector<ExprNode>& nodes() const { return nodes_; }
  std::uint32_t root() const { return root_; }

  friend bool structurally_equal(const Expr& a, const Expr& b);

 private:
  friend class Parser;
  std::vector<ExprNode> nodes_;
  std::vector<std::string> vars_;
  std::uint32_t root_ = 0;
  bool boolean_ = false;

  std::int64_t eval_node(std::uint32_t idx,
                         std::span<const std::int64_t> values) const;
  bool eval_node_bool(std::uint32_t idx,
                      std::span<const std::int64_t> values) const;
  void print_node(std::uint32_t idx, std::string& out) const;
  std::vector<std::int64_t> values_for(const Valuation& v) const;
};

bool structurally_equal(const Expr& a, const Expr& b);

// Parses a numeric formula. Rejects Boolean roots ("true", "a && b").
Expr parse_numeric(std::string_view text);

// Parses a Boolean formula. A bare variable is read as "value is nonzero".
Expr parse_boolean(std::string_view text);

}  // namespace lpnreach

#endif

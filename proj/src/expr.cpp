#include "lpnreach/expr.hpp"

#include <cctype>
#include <charconv>
#include <limits>
#include <unordered_map>

namespace lpnreach {

namespace {

constexpr std::int64_t kI64Min = std::numeric_limits<std::int64_t>::min();

std::int64_t checked_neg(std::int64_t a) {
  if (a == kI64Min) throw EvalError("integer overflow in negation");
  return -a;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw EvalError("integer overflow in +");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw EvalError("integer overflow in -");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw EvalError("integer overflow in *");
  return r;
}

std::int64_t checked_div(std::int64_t a, std::int64_t b) {
  if (b == 0) throw EvalError("division by zero");
  if (a == kI64Min && b == -1) throw EvalError("integer overflow in /");
  return a / b;  // truncates toward zero
}

std::int64_t checked_mod(std::int64_t a, std::int64_t b) {
  if (b == 0) throw EvalError("modulus by zero");
  if (a == kI64Min && b == -1) throw EvalError("integer overflow in %");
  return a % b;  // sign of the dividend
}

// Exponentiation by squaring with overflow checks. 0**0 is 1; a negative
// exponent is an evaluation error because the result type is integral.
std::int64_t checked_pow(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw EvalError("negative exponent in **");
  std::int64_t result = 1;
  std::int64_t b = base;
  std::int64_t e = exp;
  while (e > 0) {
    if (e & 1) result = checked_mul(result, b);
    e >>= 1;
    if (e > 0) b = checked_mul(b, b);
  }
  return result;
}

}  // namespace

std::int64_t Expr::eval_node(std::uint32_t idx,
                             std::span<const std::int64_t> values) const {
  const ExprNode& n = nodes_[idx];
  switch (n.kind) {
    case ExprKind::kConst:
      return n.value;
    case ExprKind::kVar:
      return values[n.var];
    case ExprKind::kNeg:
      return checked_neg(eval_node(n.lhs, values));
    case ExprKind::kAdd:
      return checked_add(eval_node(n.lhs, values), eval_node(n.rhs, values));
    case ExprKind::kSub:
      return checked_sub(eval_node(n.lhs, values), eval_node(n.rhs, values));
    case ExprKind::kMul:
      return checked_mul(eval_node(n.lhs, values), eval_node(n.rhs, values));
    case ExprKind::kDiv:
      return checked_div(eval_node(n.lhs, values), eval_node(n.rhs, values));
    case ExprKind::kPow:
      return checked_pow(eval_node(n.lhs, values), eval_node(n.rhs, values));
    case ExprKind::kMod:
      return checked_mod(eval_node(n.lhs, values), eval_node(n.rhs, values));
    case ExprKind::kBitNot:
      return ~eval_node(n.lhs, values);
    case ExprKind::kBitOr:
      return eval_node(n.lhs, values) | eval_node(n.rhs, values);
    case ExprKind::kBitAnd:
      return eval_node(n.lhs, values) & eval_node(n.rhs, values);
    case ExprKind::kBitXor:
      return eval_node(n.lhs, values) ^ eval_node(n.rhs, values);
    case ExprKind::kIntOfBool:
      return eval_node_bool(n.lhs, values) ? 1 : 0;
    default:
      throw ContractViolation("boolean node in numeric evaluation");
  }
}

bool Expr::eval_node_bool(std::uint32_t idx,
                          std::span<const std::int64_t> values) const {
  const ExprNode& n = nodes_[idx];
  switch (n.kind) {
    case ExprKind::kTrue:
      return true;
    case ExprKind::kFalse:
      return false;
    case ExprKind::kTruthyVar:
      return values[n.var] != 0;
    case ExprKind::kNot:
      return !eval_node_bool(n.lhs, values);
    case ExprKind::kAnd:
      return eval_node_bool(n.lhs, values) && eval_node_bool(n.rhs, values);
    case ExprKind::kOr:
      return eval_node_bool(n.lhs, values) || eval_node_bool(n.rhs, values);
    case ExprKind::kEq:
      return eval_node(n.lhs, values) == eval_node(n.rhs, values);
    case ExprKind::kGe:
      return eval_node(n.lhs, values) >= eval_node(n.rhs, values);
    case ExprKind::kGt:
      return eval_node(n.lhs, values) > eval_node(n.rhs, values);
    case ExprKind::kLe:
      return eval_node(n.lhs, values) <= eval_node(n.rhs, values);
    case ExprKind::kLt:
      return eval_node(n.lhs, values) < eval_node(n.rhs, values);
    default:
      throw ContractViolation("numeric node in boolean evaluation");
  }
}

std::int64_t Expr::eval_num(std::span<const std::int64_t> values) const {
  if (!valid()) throw ContractViolation("evaluating empty expression");
  if (boolean_) throw ContractViolation("eval_num on boolean expression");
  if (values.size() < vars_.size())
    throw ContractViolation("value array shorter than variable list");
  return eval_node(root_, values);
}

bool Expr::eval_bool(std::span<const std::int64_t> values) const {
  if (!valid()) throw ContractViolation("evaluating empty expression");
  if (!boolean_) throw ContractViolation("eval_bool on numeric expression");
  if (values.size() < vars_.size())
    throw ContractViolation("value array shorter than variable list");
  return eval_node_bool(root_, values);
}

std::vector<std::int64_t> Expr::values_for(const Valuation& v) const {
  std::vector<std::int64_t> values;
  values.reserve(vars_.size());
  for (const std::string& name : vars_) {
    auto it = v.find(name);
    if (it == v.end()) throw EvalError("unbound variable: " + name);
    values.push_back(it->second);
  }
  return values;
}

std::int64_t Expr::eval_num(const Valuation& v) const {
  return eval_num(std::span<const std::int64_t>(values_for(v)));
}

bool Expr::eval_bool(const Valuation& v) const {
  return eval_bool(std::span<const std::int64_t>(values_for(v)));
}

Expr Expr::bind(const std::vector<std::string>& frame) const {
  std::unordered_map<std::string_view, std::uint32_t> slot;
  slot.reserve(frame.size());
  for (std::size_t i = 0; i < frame.size(); ++i)
    slot.emplace(frame[i], static_cast<std::uint32_t>(i));

  Expr out = *this;
  out.vars_.assign(frame.begin(), frame.end());
  for (ExprNode& n : out.nodes_) {
    if (n.kind != ExprKind::kVar && n.kind != ExprKind::kTruthyVar) continue;
    auto it = slot.find(vars_[n.var]);
    if (it == slot.end())
      throw ModelError("variable not in frame: " + vars_[n.var]);
    n.var = it->second;
  }
  return out;
}

void Expr::print_node(std::uint32_t idx, std::string& out) const {
  const ExprNode& n = nodes_[idx];
  auto binop = [&](const char* op) {
    out += '(';
    print_node(n.lhs, out);
    out += ' ';
    out += op;
    out += ' ';
    print_node(n.rhs, out);
    out += ')';
  };
  auto call2 = [&](const char* fn) {
    out += fn;
    out += '(';
    print_node(n.lhs, out);
    out += ", ";
    print_node(n.rhs, out);
    out += ')';
  };
  switch (n.kind) {
    case ExprKind::kConst:
      out += std::to_string(n.value);
      break;
    case ExprKind::kVar:
    case ExprKind::kTruthyVar:
      out += vars_[n.var];
      break;
    case ExprKind::kNeg:
      out += "(-";
      print_node(n.lhs, out);
      out += ')';
      break;
    case ExprKind::kAdd: binop("+"); break;
    case ExprKind::kSub: binop("-"); break;
    case ExprKind::kMul: binop("*"); break;
    case ExprKind::kDiv: binop("/"); break;
    case ExprKind::kPow: binop("**"); break;
    case ExprKind::kMod: binop("%"); break;
    case ExprKind::kBitNot:
      out += "NOT(";
      print_node(n.lhs, out);
      out += ')';
      break;
    case ExprKind::kBitOr: call2("OR"); break;
    case ExprKind::kBitAnd: call2("AND"); break;
    case ExprKind::kBitXor: call2("XOR"); break;
    case ExprKind::kIntOfBool:
      out += "INT(";
      print_node(n.lhs, out);
      out += ')';
      break;
    case ExprKind::kTrue:
      out += "true";
      break;
    case ExprKind::kFalse:
      out += "false";
      break;
    case ExprKind::kNot:
      out += "(!";
      print_node(n.lhs, out);
      out += ')';
      break;
    case ExprKind::kAnd: binop("&&"); break;
    case ExprKind::kOr: binop("||"); break;
    case ExprKind::kEq: binop("=="); break;
    case ExprKind::kGe: binop(">="); break;
    case ExprKind::kGt: binop(">"); break;
    case ExprKind::kLe: binop("<="); break;
    case ExprKind::kLt: binop("<"); break;
  }
}

std::string Expr::str() const {
  if (!valid()) return "";
  std::string out;
  print_node(root_, out);
  return out;
}

namespace {

bool nodes_equal(const Expr& a, std::uint32_t ia, const Expr& b,
                 std::uint32_t ib) {
  const ExprNode& na = a.nodes()[ia];
  const ExprNode& nb = b.nodes()[ib];
  if (na.kind != nb.kind) return false;
  switch (na.kind) {
    case ExprKind::kConst:
      return na.value == nb.value;
    case ExprKind::kVar:
    case ExprKind::kTruthyVar:
      return a.vars()[na.var] == b.vars()[nb.var];
    case ExprKind::kTrue:
    case ExprKind::kFalse:
      return true;
    case ExprKind::kNeg:
    case ExprKind::kBitNot:
    case ExprKind::kIntOfBool:
    case ExprKind::kNot:
      return nodes_equal(a, na.lhs, b, nb.lhs);
    default:
      return nodes_equal(a, na.lhs, b, nb.lhs) &&
             nodes_equal(a, na.rhs, b, nb.rhs);
  }
}

}  // namespace

bool structurally_equal(const Expr& a, const Expr& b) {
  if (!a.valid() || !b.valid()) return a.valid() == b.valid();
  if (a.boolean() != b.boolean()) return false;
  return nodes_equal(a, a.root(), b, b.root());
}

// ---------------------------------------------------------------------------
// Lexer and recursive-descent parser.
//
// Precedence, loosest first:
//   ||  <  &&  <  comparisons (non-associative)  <  + -
//   <  * / %  <  ** (right-associative)  <  unary - !  <  atoms
// Bitwise operations are call-style functions: NOT(e), OR(e,e), AND(e,e),
// XOR(e,e); INT(phi) converts a Boolean subformula to 0/1. A bare variable
// in Boolean position reads as "value is nonzero"; any other numeric
// expression there must be compared explicitly.
// ---------------------------------------------------------------------------

namespace {

enum class Tok : std::uint8_t {
  kEnd,
  kNumber,
  kIdent,
  kTrue,
  kFalse,
  kNot,   // bitwise complement keyword
  kOr,    // bitwise or keyword
  kAnd,   // bitwise and keyword
  kXor,   // bitwise xor keyword
  kInt,   // INT( phi )
  kComma,
  kPlus,
  kMinus,
  kStar,
  kSlash,
  kStarStar,
  kPercent,
  kLParen,
  kRParen,
  kBang,
  kAmpAmp,
  kPipePipe,
  kEqEq,
  kGe,
  kGt,
  kLe,
  kLt,
};

struct Token {
  Tok kind;
  std::int64_t number = 0;
  std::string_view text;
  int column = 0;  // 1-based
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t pos = 0;
  auto col = [&] { return static_cast<int>(pos) + 1; };
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    int start_col = col();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos;
      while (pos < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
      std::int64_t value = 0;
      auto [ptr, ec] =
          std::from_chars(text.data() + start, text.data() + pos, value);
      if (ec != std::errc() || ptr != text.data() + pos)
        throw ParseError("integer literal out of range", 0, start_col);
      out.push_back(
          {Tok::kNumber, value, text.substr(start, pos - start), start_col});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) ||
              text[pos] == '_'))
        ++pos;
      std::string_view w = text.substr(start, pos - start);
      Tok k = Tok::kIdent;
      if (w == "true") k = Tok::kTrue;
      else if (w == "false") k = Tok::kFalse;
      else if (w == "NOT") k = Tok::kNot;
      else if (w == "OR") k = Tok::kOr;
      else if (w == "AND") k = Tok::kAnd;
      else if (w == "XOR") k = Tok::kXor;
      else if (w == "INT") k = Tok::kInt;
      out.push_back({k, 0, w, start_col});
      continue;
    }
    switch (c) {
      case '+': ++pos; out.push_back({Tok::kPlus, 0, {}, start_col}); break;
      case '-': ++pos; out.push_back({Tok::kMinus, 0, {}, start_col}); break;
      case '*':
        ++pos;
        if (pos < text.size() && text[pos] == '*') {
          ++pos;
          out.push_back({Tok::kStarStar, 0, {}, start_col});
        } else {
          out.push_back({Tok::kStar, 0, {}, start_col});
        }
        break;
      case '/': ++pos; out.push_back({Tok::kSlash, 0, {}, start_col}); break;
      case '%': ++pos; out.push_back({Tok::kPercent, 0, {}, start_col}); break;
      case '(': ++pos; out.push_back({Tok::kLParen, 0, {}, start_col}); break;
      case ')': ++pos; out.push_back({Tok::kRParen, 0, {}, start_col}); break;
      case ',': ++pos; out.push_back({Tok::kComma, 0, {}, start_col}); break;
      case '!':
        ++pos;
        if (pos < text.size() && text[pos] == '=')
          throw ParseError("'!=' is not an operator; use !(a == b)", 0,
                           start_col);
        out.push_back({Tok::kBang, 0, {}, start_col});
        break;
      case '&':
        ++pos;
        if (pos < text.size() && text[pos] == '&') {
          ++pos;
          out.push_back({Tok::kAmpAmp, 0, {}, start_col});
        } else {
          throw ParseError("single '&' is not an operator; use && or AND", 0,
                           start_col);
        }
        break;
      case '|':
        ++pos;
        if (pos < text.size() && text[pos] == '|') {
          ++pos;
          out.push_back({Tok::kPipePipe, 0, {}, start_col});
        } else {
          throw ParseError("single '|' is not an operator; use || or OR", 0,
                           start_col);
        }
        break;
      case '=':
        ++pos;
        if (pos < text.size() && text[pos] == '=') {
          ++pos;
          out.push_back({Tok::kEqEq, 0, {}, start_col});
        } else {
          throw ParseError("single '=' is not an operator; use ==", 0,
                           start_col);
        }
        break;
      case '>':
        ++pos;
        if (pos < text.size() && text[pos] == '=') {
          ++pos;
          out.push_back({Tok::kGe, 0, {}, start_col});
        } else {
          out.push_back({Tok::kGt, 0, {}, start_col});
        }
        break;
      case '<':
        ++pos;
        if (pos < text.size() && text[pos] == '=') {
          ++pos;
          out.push_back({Tok::kLe, 0, {}, start_col});
        } else {
          out.push_back({Tok::kLt, 0, {}, start_col});
        }
        break;
      case '~':
        throw ParseError("'~' is not an operator; use NOT(x)", 0, start_col);
      case '^':
        throw ParseError("'^' is not an operator; use ** or XOR", 0,
                         start_col);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", 0,
                         start_col);
    }
  }
  out.push_back({Tok::kEnd, 0, {}, col()});
  return out;
}

}  // namespace

class Parser {
 public:
  Parser(std::string_view text, bool boolean_root)
      : tokens_(lex(text)), boolean_root_(boolean_root) {}

  Expr parse() {
    std::uint32_t root = boolean_root_ ? parse_or() : parse_add();
    if (cur().kind != Tok::kEnd)
      throw ParseError("unexpected trailing input", 0, cur().column);
    expr_.root_ = root;
    expr_.boolean_ = boolean_root_;
    return std::move(expr_);
  }

 private:
  const Token& cur() const { return tokens_[ti_]; }
  void advance() {
    if (cur().kind != Tok::kEnd) ++ti_;
  }

  bool accept(Tok k) {
    if (cur().kind != k) return false;
    advance();
    return true;
  }

  void expect(Tok k, const char* what) {
    if (cur().kind != k)
      throw ParseError(std::string("expected ") + what, 0, cur().column);
    advance();
  }

  std::uint32_t add_node(ExprNode n) {
    expr_.nodes_.push_back(n);
    return static_cast<std::uint32_t>(expr_.nodes_.size() - 1);
  }

  std::uint32_t var_index(std::string_view name) {
    std::string key(name);
    auto it = var_slots_.find(key);
    if (it != var_slots_.end()) return it->second;
    expr_.vars_.push_back(key);
    std::uint32_t idx = static_cast<std::uint32_t>(expr_.vars_.size() - 1);
    var_slots_.emplace(std::move(key), idx);
    return idx;
  }

  struct Mark {
    std::size_t token;
    std::size_t nodes;
    std::size_t vars;
  };

  Mark mark() const { return {ti_, expr_.nodes_.size(), expr_.vars_.size()}; }

  void rewind(const Mark& m) {
    ti_ = m.token;
    expr_.nodes_.resize(m.nodes);
    while (expr_.vars_.size() > m.vars) {
      var_slots_.erase(expr_.vars_.back());
      expr_.vars_.pop_back();
    }
  }

  // phi := phi-and ('||' phi-and)*
  std::uint32_t parse_or() {
    std::uint32_t lhs = parse_and();
    while (cur().kind == Tok::kPipePipe) {
      advance();
      std::uint32_t rhs = parse_and();
      lhs = add_node({ExprKind::kOr, 0, 0, lhs, rhs});
    }
    return lhs;
  }

  // phi-and := phi-atom ('&&' phi-atom)*
  std::uint32_t parse_and() {
    std::uint32_t lhs = parse_cmp();
    while (cur().kind == Tok::kAmpAmp) {
      advance();
      std::uint32_t rhs = parse_cmp();
      lhs = add_node({ExprKind::kAnd, 0, 0, lhs, rhs});
    }
    return lhs;
  }

  static bool is_cmp(Tok k) {
    return k == Tok::kEqEq || k == Tok::kGe || k == Tok::kGt || k == Tok::kLe ||
           k == Tok::kLt;
  }

  static ExprKind cmp_kind(Tok k) {
    switch (k) {
      case Tok::kEqEq: return ExprKind::kEq;
      case Tok::kGe: return ExprKind::kGe;
      case Tok::kGt: return ExprKind::kGt;
      case Tok::kLe: return ExprKind::kLe;
      default: return ExprKind::kLt;
    }
  }

  // phi-atom := true | false | '!' phi-prim | chi cmpop chi
  //           | v | '(' phi ')'
  //
  // A '(' is ambiguous between a parenthesized formula and a parenthesized
  // numeric operand of a comparison, so the numeric reading is tried first
  // and the formula reading taken on failure.
  std::uint32_t parse_cmp() {
    switch (cur().kind) {
      case Tok::kTrue:
        advance();
        return reject_cmp_after(add_node({ExprKind::kTrue, 0, 0, 0, 0}));
      case Tok::kFalse:
        advance();
        return reject_cmp_after(add_node({ExprKind::kFalse, 0, 0, 0, 0}));
      case Tok::kBang: {
        advance();
        std::uint32_t inner = parse_phi_prim();
        return reject_cmp_after(add_node({ExprKind::kNot, 0, 0, inner, 0}));
      }
      default:
        break;
    }

    if (cur().kind == Tok::kLParen) {
      Mark m = mark();
      try {
        return parse_cmp_numeric_first();
      } catch (const ParseError&) {
        rewind(m);
      }
      expect(Tok::kLParen, "'('");
      std::uint32_t inner = parse_or();
      expect(Tok::kRParen, "')'");
      return reject_cmp_after(inner);
    }
    return parse_cmp_numeric_first();
  }

  std::uint32_t parse_cmp_numeric_first() {
    std::uint32_t lhs = parse_add();
    if (is_cmp(cur().kind)) {
      Tok op = cur().kind;
      advance();
      std::uint32_t rhs = parse_add();
      if (is_cmp(cur().kind))
        throw ParseError("comparisons do not chain; use && to combine", 0,
                         cur().column);
      return add_node({cmp_kind(op), 0, 0, lhs, rhs});
    }
    return coerce_bool(lhs);
  }

  // Operand of '!': a Boolean primary. Unary '!' binds tighter than
  // comparison, so "!x == 0" is a type error, not "!(x == 0)".
  std::uint32_t parse_phi_prim() {
    switch (cur().kind) {
      case Tok::kTrue:
        advance();
        return add_node({ExprKind::kTrue, 0, 0, 0, 0});
      case Tok::kFalse:
        advance();
        return add_node({ExprKind::kFalse, 0, 0, 0, 0});
      case Tok::kBang: {
        advance();
        std::uint32_t inner = parse_phi_prim();
        return add_node({ExprKind::kNot, 0, 0, inner, 0});
      }
      case Tok::kIdent: {
        if (tokens_[ti_ + 1].kind == Tok::kLParen)
          throw ParseError(
              "unknown function name: " + std::string(cur().text), 0,
              cur().column);
        std::uint32_t slot = var_index(cur().text);
        advance();
        return add_node({ExprKind::kTruthyVar, 0, slot, 0, 0});
      }
      case Tok::kLParen: {
        advance();
        std::uint32_t inner = parse_or();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      default:
        throw ParseError(
            "expected a Boolean operand after '!': a variable, true, false "
            "or a parenthesized formula",
            0, cur().column);
    }
  }

  std::uint32_t reject_cmp_after(std::uint32_t idx) {
    if (is_cmp(cur().kind))
      throw ParseError(
          "comparison applied to a Boolean operand; comparisons take numeric "
          "operands",
          0, cur().column);
    return idx;
  }

  // Numeric subtree standing in Boolean position. Only a plain variable
  // reference is implicitly truthy; anything else needs a comparison.
  std::uint32_t coerce_bool(std::uint32_t idx) {
    ExprNode& n = expr_.nodes_[idx];
    if (n.kind == ExprKind::kVar) {
      n.kind = ExprKind::kTruthyVar;
      return idx;
    }
    throw ParseError(
        "numeric expression in Boolean position; compare it (e.g. x > 0) or "
        "use a bare variable",
        0, cur().column);
  }

  // chi := chi-mul (('+'|'-') chi-mul)*
  std::uint32_t parse_add() {
    std::uint32_t lhs = parse_mul();
    for (;;) {
      ExprKind k;
      if (cur().kind == Tok::kPlus) k = ExprKind::kAdd;
      else if (cur().kind == Tok::kMinus) k = ExprKind::kSub;
      else break;
      advance();
      std::uint32_t rhs = parse_mul();
      lhs = add_node({k, 0, 0, lhs, rhs});
    }
    return lhs;
  }

  // chi-mul := chi-pow (('*'|'/'|'%') chi-pow)*
  std::uint32_t parse_mul() {
    std::uint32_t lhs = parse_pow();
    for (;;) {
      ExprKind k;
      if (cur().kind == Tok::kStar) k = ExprKind::kMul;
      else if (cur().kind == Tok::kSlash) k = ExprKind::kDiv;
      else if (cur().kind == Tok::kPercent) k = ExprKind::kMod;
      else break;
      advance();
      std::uint32_t rhs = parse_pow();
      lhs = add_node({k, 0, 0, lhs, rhs});
    }
    return lhs;
  }

  // chi-pow := chi-unary ('**' chi-pow)?   (right-associative; unary minus
  // binds tighter, so -2**2 is (-2)**2 = 4)
  std::uint32_t parse_pow() {
    std::uint32_t lhs = parse_unary();
    if (cur().kind == Tok::kStarStar) {
      advance();
      std::uint32_t rhs = parse_pow();
      lhs = add_node({ExprKind::kPow, 0, 0, lhs, rhs});
    }
    return lhs;
  }

  // chi-unary := '-' chi-unary | chi-atom
  std::uint32_t parse_unary() {
    if (accept(Tok::kMinus)) {
      std::uint32_t inner = parse_unary();
      return add_node({ExprKind::kNeg, 0, 0, inner, 0});
    }
    return parse_atom();
  }

  // chi-atom := number | v | '(' chi ')' | NOT '(' chi ')' | INT '(' phi ')'
  std::uint32_t parse_atom() {
    switch (cur().kind) {
      case Tok::kNumber: {
        std::int64_t v = cur().number;
        advance();
        return add_node({ExprKind::kConst, v, 0, 0, 0});
      }
      case Tok::kIdent: {
        if (tokens_[ti_ + 1].kind == Tok::kLParen)
          throw ParseError(
              "unknown function name: " + std::string(cur().text), 0,
              cur().column);
        std::uint32_t slot = var_index(cur().text);
        advance();
        return add_node({ExprKind::kVar, 0, slot, 0, 0});
      }
      case Tok::kLParen: {
        advance();
        std::uint32_t inner = parse_add();
        expect(Tok::kRParen, "')'");
        return inner;
      }
      case Tok::kNot: {
        advance();
        expect(Tok::kLParen, "'(' after NOT");
        std::uint32_t inner = parse_add();
        expect(Tok::kRParen, "')'");
        return add_node({ExprKind::kBitNot, 0, 0, inner, 0});
      }
      case Tok::kOr:
      case Tok::kAnd:
      case Tok::kXor: {
        Tok fn = cur().kind;
        advance();
        const char* name = fn == Tok::kOr ? "OR" : fn == Tok::kAnd ? "AND"
                                                                   : "XOR";
        expect(Tok::kLParen, (std::string("'(' after ") + name).c_str());
        std::uint32_t lhs = parse_add();
        expect(Tok::kComma, "','");
        std::uint32_t rhs = parse_add();
        expect(Tok::kRParen, "')'");
        ExprKind k = fn == Tok::kOr    ? ExprKind::kBitOr
                     : fn == Tok::kAnd ? ExprKind::kBitAnd
                                       : ExprKind::kBitXor;
        return add_node({k, 0, 0, lhs, rhs});
      }
      case Tok::kInt: {
        advance();
        expect(Tok::kLParen, "'(' after INT");
        std::uint32_t inner = parse_or();
        expect(Tok::kRParen, "')'");
        return add_node({ExprKind::kIntOfBool, 0, 0, inner, 0});
      }
      case Tok::kTrue:
      case Tok::kFalse:
      case Tok::kBang:
        throw ParseError("Boolean atom in numeric position; wrap it in INT()",
                         0, cur().column);
      default:
        throw ParseError("expected a number, variable or '('", 0,
                         cur().column);
    }
  }

  std::vector<Token> tokens_;
  std::size_t ti_ = 0;
  bool boolean_root_;
  Expr expr_;
  // Keys are owned copies: vars_ reallocates while parsing, so views into it
  // would dangle.
  std::unordered_map<std::string, std::uint32_t> var_slots_;
};

Expr parse_numeric(std::string_view text) {
  return Parser(text, /*boolean_root=*/false).parse();
}

Expr parse_boolean(std::string_view text) {
  return Parser(text, /*boolean_root=*/true).parse();
}

}  // namespace lpnreach

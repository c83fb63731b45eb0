#include "lpnreach/model_parser.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace lpnreach {

namespace {

bool is_ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}

bool is_ident_char(char c) {
  return is_ident_start(c) || (c >= '0' && c <= '9');
}

bool is_reserved(std::string_view word) {
  return word == "module" || word == "var" || word == "place" ||
         word == "trans" || word == "guard" || word == "assign" ||
         word == "marked";
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
  throw ParseError(msg, line, 0);
}

// Cursor over one logical line.
class LineScanner {
 public:
  LineScanner(std::string_view text, std::size_t line)
      : text_(text), line_(line) {}

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t'))
      ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  bool try_consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const std::string& what) {
    if (!try_consume(c))
      fail(line_, "expected '" + std::string(1, c) + "' " + what);
  }

  std::string_view ident(const std::string& what) {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < text_.size() && is_ident_start(text_[pos_])) {
      ++pos_;
      while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    }
    if (start == pos_) fail(line_, "expected " + what);
    return text_.substr(start, pos_ - start);
  }

  // Next whitespace-delimited word without consuming it; empty at end.
  std::string_view peek_word() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && text_[end] != ' ' && text_[end] != '\t')
      ++end;
    return text_.substr(pos_, end - pos_);
  }

  std::string_view rest() {
    skip_ws();
    return text_.substr(pos_);
  }

  void advance(std::size_t n) { pos_ += n; }

  std::size_t line() const { return line_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

std::int64_t parse_int(LineScanner& sc) {
  std::string_view rest = sc.rest();
  std::int64_t value = 0;
  auto [p, ec] =
      std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc() || p == rest.data())
    fail(sc.line(), "expected an integer initial value");
  sc.advance(static_cast<std::size_t>(p - rest.data()));
  return value;
}

std::vector<std::string> parse_place_list(LineScanner& sc) {
  std::vector<std::string> out;
  sc.expect('{', "before a place list");
  if (sc.try_consume('}')) return out;
  for (;;) {
    out.emplace_back(sc.ident("a place name"));
    if (sc.try_consume('}')) return out;
    sc.expect(',', "between place names");
  }
}

// Offset of the first depth-0 occurrence of the word `assign`, or npos.
// Guards never contain it: `assign` is reserved, so it cannot be a
// variable, and the expression grammar has no other use for it.
std::size_t find_assign_keyword(std::string_view s) {
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (depth == 0 && s.compare(i, 6, "assign") == 0 &&
        (i == 0 || !is_ident_char(s[i - 1])) &&
        (i + 6 == s.size() || !is_ident_char(s[i + 6])))
      return i;
  }
  return std::string_view::npos;
}

// Splits on commas that sit outside parentheses.
std::vector<std::string_view> split_top_level(std::string_view s) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (s[i] == ',' && depth == 0) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  parts.push_back(s.substr(start));
  return parts;
}

// Re-parses an embedded expression just to translate its diagnostics into
// file coordinates; compose() parses it again for real.
void check_expr(std::string_view text, bool boolean, std::size_t line,
                const std::string& what) {
  try {
    if (boolean)
      parse_boolean(text);
    else
      parse_numeric(text);
  } catch (const ParseError& e) {
    throw ParseError(what + ": " + e.message(), line, e.column());
  }
}

TransitionDef parse_transition(LineScanner& sc) {
  TransitionDef t;
  t.name = sc.ident("a transition name after 'trans'");
  sc.expect(':', "after the transition name");
  t.preset = parse_place_list(sc);
  sc.expect('-', "between preset and postset ('->')");
  sc.expect('>', "between preset and postset ('->')");
  t.postset = parse_place_list(sc);

  if (sc.peek_word() == "guard") {
    sc.advance(sc.rest().find("guard") + 5);
    std::string_view tail = sc.rest();
    std::size_t cut = find_assign_keyword(tail);
    std::string_view guard =
        trim(cut == std::string_view::npos ? tail : tail.substr(0, cut));
    if (guard.empty()) fail(sc.line(), "empty guard expression");
    check_expr(guard, true, sc.line(), "guard");
    t.guard = std::string(guard);
    sc.advance(cut == std::string_view::npos ? tail.size() : cut);
  }

  if (sc.peek_word() == "assign") {
    sc.advance(sc.rest().find("assign") + 6);
    std::string_view tail = trim(sc.rest());
    if (tail.empty()) fail(sc.line(), "empty assignment list");
    for (std::string_view part : split_top_level(tail)) {
      part = trim(part);
      LineScanner as(part, sc.line());
      AssignDef a;
      a.var = as.ident("a variable name in an assignment");
      as.expect(':', "in ':=' of an assignment");
      as.expect('=', "in ':=' of an assignment");
      std::string_view rhs = trim(as.rest());
      if (rhs.empty()) fail(sc.line(), "empty assignment right-hand side");
      check_expr(rhs, false, sc.line(), "assignment");
      a.rhs = std::string(rhs);
      t.assigns.push_back(std::move(a));
    }
    sc.advance(sc.rest().size());
  }

  if (!sc.at_end())
    fail(sc.line(),
         "unexpected trailing text: '" + std::string(sc.rest()) + "'");
  return t;
}

}  // namespace

std::vector<ModuleDef> parse_model_defs(std::string_view text) {
  std::vector<ModuleDef> defs;
  ModuleDef* current = nullptr;

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (std::size_t hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    std::string_view line = trim(raw);
    if (line.empty()) continue;

    LineScanner sc(line, line_no);
    std::string_view word = sc.ident("a directive");

    if (word == "module") {
      std::string_view name = sc.ident("a module name after 'module'");
      if (!sc.at_end())
        fail(line_no, "unexpected text after the module name");
      defs.emplace_back();
      defs.back().name = std::string(name);
      current = &defs.back();
      continue;
    }

    if (current == nullptr)
      fail(line_no, "'" + std::string(word) +
                        "' before any 'module' line; models start with "
                        "'module <name>'");

    if (word == "var") {
      VarDef v;
      std::string_view id = sc.ident("a variable name after 'var'");
      if (is_reserved(id))
        fail(line_no, "'" + std::string(id) + "' is a reserved word");
      v.name = std::string(id);
      sc.expect('=', "after the variable name");
      v.init = parse_int(sc);
      if (!sc.at_end()) fail(line_no, "unexpected text after the initial value");
      current->vars.push_back(std::move(v));
    } else if (word == "place") {
      std::string_view id = sc.ident("a place name after 'place'");
      if (is_reserved(id))
        fail(line_no, "'" + std::string(id) + "' is a reserved word");
      current->places.emplace_back(id);
      if (sc.peek_word() == "marked") {
        sc.advance(sc.rest().find("marked") + 6);
        current->initial_marking.emplace_back(id);
      }
      if (!sc.at_end()) fail(line_no, "unexpected text after the place name");
    } else if (word == "trans") {
      current->transitions.push_back(parse_transition(sc));
    } else {
      fail(line_no, "unknown directive '" + std::string(word) +
                        "' (expected module, var, place, or trans)");
    }
  }

  if (defs.empty()) fail(1, "no modules");
  return defs;
}

LpnSystem parse_model(std::string_view text) {
  return compose(parse_model_defs(text));
}

LpnSystem load_model_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ModelError("cannot read model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace lpnreach

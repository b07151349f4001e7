#include "shlab/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace shlab {

namespace {

FormulaPtr make(FKind k, std::string name, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->name = std::move(name);
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

}  // namespace

FormulaPtr fvar(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("variable name must be nonempty");
  return make(FKind::Var, name, nullptr, nullptr);
}
FormulaPtr fbot() {
  static const FormulaPtr b = make(FKind::Bot, "", nullptr, nullptr);
  return b;
}
FormulaPtr ftop() {
  static const FormulaPtr t = make(FKind::Top, "", nullptr, nullptr);
  return t;
}
FormulaPtr fneg(FormulaPtr a) { return make(FKind::Neg, "", std::move(a), nullptr); }
FormulaPtr fmeet(FormulaPtr a, FormulaPtr b) {
  return make(FKind::Meet, "", std::move(a), std::move(b));
}
FormulaPtr fjoin(FormulaPtr a, FormulaPtr b) {
  return make(FKind::Join, "", std::move(a), std::move(b));
}
FormulaPtr fimp(FormulaPtr a, FormulaPtr b) {
  return make(FKind::Imp, "", std::move(a), std::move(b));
}

FormulaPtr imp_h(FormulaPtr a, FormulaPtr b) { return fimp(a, fmeet(a, std::move(b))); }
FormulaPtr star(FormulaPtr a) { return fimp(std::move(a), fbot()); }
FormulaPtr plus(FormulaPtr a) { return fneg(fimp(fneg(std::move(a)), fbot())); }
FormulaPtr iff_h(FormulaPtr a, FormulaPtr b) { return fmeet(imp_h(a, b), imp_h(b, a)); }

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FKind::Var: return a->name == b->name;
    case FKind::Bot:
    case FKind::Top: return true;
    case FKind::Neg: return equal(a->lhs, b->lhs);
    case FKind::Meet:
    case FKind::Join:
    case FKind::Imp: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
  return false;
}

std::size_t formula_hash(const FormulaPtr& f) {
  if (!f) return 0;
  std::size_t h = static_cast<std::size_t>(f->kind) * 0x9e3779b97f4a7c15ull;
  auto mix = [&h](std::size_t v) {
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  if (f->kind == FKind::Var) mix(std::hash<std::string>{}(f->name));
  if (f->lhs) mix(formula_hash(f->lhs));
  if (f->rhs) mix(formula_hash(f->rhs));
  return h;
}

std::set<std::string> variables(const FormulaPtr& f) {
  std::set<std::string> out;
  std::function<void(const FormulaPtr&)> walk = [&](const FormulaPtr& g) {
    if (!g) return;
    if (g->kind == FKind::Var) out.insert(g->name);
    walk(g->lhs);
    walk(g->rhs);
  };
  walk(f);
  return out;
}

int formula_depth(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + std::max(formula_depth(f->lhs), formula_depth(f->rhs));
}

int formula_size(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + formula_size(f->lhs) + formula_size(f->rhs);
}

bool formula_less(const FormulaPtr& a, const FormulaPtr& b) {
  if (a.get() == b.get()) return false;
  if (!a) return static_cast<bool>(b);
  if (!b) return false;
  if (a->kind != b->kind) return a->kind < b->kind;
  if (a->kind == FKind::Var) return a->name < b->name;
  if (formula_less(a->lhs, b->lhs)) return true;
  if (formula_less(b->lhs, a->lhs)) return false;
  return formula_less(a->rhs, b->rhs);
}

FormulaPtr substitute(const FormulaPtr& f, const Substitution& s) {
  switch (f->kind) {
    case FKind::Var: {
      auto it = s.find(f->name);
      if (it == s.end()) throw UnboundVariable(f->name);
      return it->second;
    }
    case FKind::Bot:
    case FKind::Top: return f;
    case FKind::Neg: return fneg(substitute(f->lhs, s));
    case FKind::Meet: return fmeet(substitute(f->lhs, s), substitute(f->rhs, s));
    case FKind::Join: return fjoin(substitute(f->lhs, s), substitute(f->rhs, s));
    case FKind::Imp: return fimp(substitute(f->lhs, s), substitute(f->rhs, s));
  }
  throw std::logic_error("unreachable formula kind");
}

Substitution compose(const Substitution& t, const Substitution& s) {
  Substitution out;
  for (const auto& [k, v] : s) out[k] = substitute(v, t);
  for (const auto& [k, v] : t)
    if (!out.count(k)) out[k] = v;
  return out;
}

ParseError::ParseError(std::size_t at, const std::string& what,
                       std::vector<std::string> expect)
    : std::runtime_error(what), offset(at), expected(std::move(expect)) {}

namespace {

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  bool peek(const std::string& tok) {
    skip_ws();
    return text.compare(pos, tok.size(), tok) == 0;
  }

  bool eat(const std::string& tok) {
    if (!peek(tok)) return false;
    pos += tok.size();
    return true;
  }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expect) {
    std::ostringstream os;
    os << "syntax error at byte " << pos << ": " << what;
    if (!expect.empty()) {
      os << " (expected ";
      for (std::size_t i = 0; i < expect.size(); ++i)
        os << (i ? ", " : "") << expect[i];
      os << ")";
    }
    throw ParseError(pos, os.str(), std::move(expect));
  }

  static bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }
  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  FormulaPtr formula() {
    FormulaPtr l = join();
    skip_ws();
    if (eat("->")) return fimp(std::move(l), formula());
    return l;
  }

  FormulaPtr join() {
    FormulaPtr l = meet();
    while (true) {
      skip_ws();
      // Guard against "|" being the first byte of another token (none today).
      if (!eat("|")) return l;
      l = fjoin(std::move(l), meet());
    }
  }

  FormulaPtr meet() {
    FormulaPtr l = unary();
    while (true) {
      skip_ws();
      if (!eat("&")) return l;
      l = fmeet(std::move(l), unary());
    }
  }

  FormulaPtr unary() {
    skip_ws();
    if (eat("~")) return fneg(unary());
    FormulaPtr a = atom();
    while (true) {
      // primes bind immediately; no whitespace skipping between atom and '
      if (pos < text.size() && text[pos] == '\'') {
        ++pos;
        a = fneg(std::move(a));
        continue;
      }
      skip_ws();
      if (pos < text.size() && text[pos] == '\'') {
        ++pos;
        a = fneg(std::move(a));
        continue;
      }
      return a;
    }
  }

  FormulaPtr atom() {
    skip_ws();
    if (pos >= text.size())
      fail("unexpected end of input", {"identifier", "0", "1", "("});
    char c = text[pos];
    if (c == '(') {
      ++pos;
      FormulaPtr f = formula();
      skip_ws();
      if (!eat(")")) fail("unclosed parenthesis", {")"});
      return f;
    }
    if (c == '0') {
      ++pos;
      return fbot();
    }
    if (c == '1') {
      ++pos;
      return ftop();
    }
    if (ident_start(c)) {
      std::size_t start = pos;
      while (pos < text.size() && ident_char(text[pos])) ++pos;
      std::string word = text.substr(start, pos - start);
      if (word == "bot") return fbot();
      if (word == "top") return ftop();
      return fvar(word);
    }
    fail(std::string("unexpected character '") + c + "'",
         {"identifier", "0", "1", "(", "~"});
  }
};

enum Level { kImp = 0, kJoin = 1, kMeet = 2, kUnary = 3 };

int level_of(const FormulaPtr& f) {
  switch (f->kind) {
    case FKind::Imp: return kImp;
    case FKind::Join: return kJoin;
    case FKind::Meet: return kMeet;
    default: return kUnary;
  }
}

void render_at(const FormulaPtr& f, int min_level, bool sugar, std::string& out) {
  int lvl = level_of(f);
  bool parens = lvl < min_level;
  if (parens) out += "(";
  switch (f->kind) {
    case FKind::Var: out += f->name; break;
    case FKind::Bot: out += "0"; break;
    case FKind::Top: out += "1"; break;
    case FKind::Neg:
      // postfix ' needs an atom-shaped operand; parenthesize anything lower
      if (level_of(f->lhs) == kUnary) {
        render_at(f->lhs, kUnary, sugar, out);
      } else {
        out += "(";
        render_at(f->lhs, kImp, sugar, out);
        out += ")";
      }
      out += "'";
      break;
    case FKind::Meet:
      render_at(f->lhs, kMeet, sugar, out);
      out += " & ";
      render_at(f->rhs, kUnary, sugar, out);
      break;
    case FKind::Join:
      render_at(f->lhs, kJoin, sugar, out);
      out += " | ";
      render_at(f->rhs, kMeet, sugar, out);
      break;
    case FKind::Imp:
      if (sugar && f->rhs->kind == FKind::Meet && equal(f->lhs, f->rhs->lhs)) {
        render_at(f->lhs, kJoin, sugar, out);
        out += " ->H ";
        render_at(f->rhs->rhs, kImp, sugar, out);
        break;
      }
      render_at(f->lhs, kJoin, sugar, out);
      out += " -> ";
      render_at(f->rhs, kImp, sugar, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

FormulaPtr parse(const std::string& text) {
  Parser p(text);
  FormulaPtr f = p.formula();
  if (!p.at_end())
    p.fail("trailing input", {"end of input", "->", "|", "&"});
  return f;
}

std::string render(const FormulaPtr& f, bool himp_sugar) {
  std::string out;
  render_at(f, kImp, himp_sugar, out);
  return out;
}

}  // namespace shlab

#pragma once

#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace shlab {

// Propositional terms over the signature {&, |, ->, ', 0, 1}.
enum class FKind { Var, Bot, Top, Neg, Meet, Join, Imp };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Immutable AST node. Neg uses lhs only; Var uses name only.
struct Formula {
  FKind kind;
  std::string name;
  FormulaPtr lhs;
  FormulaPtr rhs;
};

FormulaPtr fvar(const std::string& name);
FormulaPtr fbot();
FormulaPtr ftop();
FormulaPtr fneg(FormulaPtr a);
FormulaPtr fmeet(FormulaPtr a, FormulaPtr b);
FormulaPtr fjoin(FormulaPtr a, FormulaPtr b);
FormulaPtr fimp(FormulaPtr a, FormulaPtr b);

// Derived connectives. imp_h(a,b) is the Heyting-style implication
// a -> (a & b); star is the pseudocomplement a -> 0; plus is the dual
// (a' -> 0)'; iff_h(a,b) = imp_h(a,b) & imp_h(b,a).
FormulaPtr imp_h(FormulaPtr a, FormulaPtr b);
FormulaPtr star(FormulaPtr a);
FormulaPtr plus(FormulaPtr a);
FormulaPtr iff_h(FormulaPtr a, FormulaPtr b);

bool equal(const FormulaPtr& a, const FormulaPtr& b);
std::size_t formula_hash(const FormulaPtr& f);
std::set<std::string> variables(const FormulaPtr& f);
int formula_depth(const FormulaPtr& f);
int formula_size(const FormulaPtr& f);

// Total order on formulas (kind, then children); used for deterministic
// iteration wherever formulas key a container.
bool formula_less(const FormulaPtr& a, const FormulaPtr& b);

struct FormulaLess {
  bool operator()(const FormulaPtr& a, const FormulaPtr& b) const {
    return formula_less(a, b);
  }
};

using Substitution = std::map<std::string, FormulaPtr>;

struct UnboundVariable : std::runtime_error {
  explicit UnboundVariable(const std::string& var)
      : std::runtime_error("unbound variable: " + var), name(var) {}
  std::string name;
};

// Homomorphic replacement of variables; throws UnboundVariable when f
// contains a variable missing from s.
FormulaPtr substitute(const FormulaPtr& f, const Substitution& s);

// compose(t, s)(x) = substitute(s(x), t), plus entries of t outside dom(s).
Substitution compose(const Substitution& t, const Substitution& s);

struct ParseError : std::runtime_error {
  ParseError(std::size_t at, const std::string& what,
             std::vector<std::string> expect);
  std::size_t offset;
  std::vector<std::string> expected;
};

// Grammar:
//   formula := join ("->" formula)?
//   join    := meet ("|" meet)*
//   meet    := unary ("&" unary)*
//   unary   := atom "'"* | "~" unary
//   atom    := ident | "0" | "1" | "bot" | "top" | "(" formula ")"
FormulaPtr parse(const std::string& text);

// Inverse of parse up to structural identity: parse(render(f)) == f.
// With himp_sugar, subterms of shape a -> (a & b) print as "a ->H b";
// that form is display-only and not part of the grammar.
std::string render(const FormulaPtr& f, bool himp_sugar = false);

}  // namespace shlab

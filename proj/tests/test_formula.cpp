#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "shlab/formula.hpp"

using namespace shlab;

TEST_CASE("parse basic shapes") {
  auto f = parse("x | x'");
  REQUIRE(f->kind == FKind::Join);
  CHECK(f->lhs->kind == FKind::Var);
  CHECK(f->lhs->name == "x");
  CHECK(f->rhs->kind == FKind::Neg);
  CHECK(f->rhs->lhs->name == "x");

  auto g = parse("x -> (x & y)");
  REQUIRE(g->kind == FKind::Imp);
  CHECK(g->rhs->kind == FKind::Meet);

  auto h = parse("0 -> 1");
  CHECK(h->lhs->kind == FKind::Bot);
  CHECK(h->rhs->kind == FKind::Top);

  CHECK(equal(parse("bot -> top"), h));
}

TEST_CASE("precedence and associativity") {
  // ' > & > | > ->, with -> right-associative
  CHECK(equal(parse("x & y | z"), fjoin(fmeet(fvar("x"), fvar("y")), fvar("z"))));
  CHECK(equal(parse("x | y & z"), fjoin(fvar("x"), fmeet(fvar("y"), fvar("z")))));
  CHECK(equal(parse("x -> y -> z"), fimp(fvar("x"), fimp(fvar("y"), fvar("z")))));
  CHECK(equal(parse("x & y'"), fmeet(fvar("x"), fneg(fvar("y")))));
  CHECK(equal(parse("x''"), fneg(fneg(fvar("x")))));
  CHECK(equal(parse("~x'"), fneg(fneg(fvar("x")))));
  CHECK(equal(parse("~~x"), fneg(fneg(fvar("x")))));
  CHECK(equal(parse("(x & y)'"), fneg(fmeet(fvar("x"), fvar("y")))));
  CHECK(equal(parse("x & y & z"), fmeet(fmeet(fvar("x"), fvar("y")), fvar("z"))));
  CHECK(equal(parse("x | y | z"), fjoin(fjoin(fvar("x"), fvar("y")), fvar("z"))));
}

TEST_CASE("render examples") {
  CHECK(render(fimp(fbot(), ftop())) == "0 -> 1");
  CHECK(render(fneg(fneg(fvar("x")))) == "x''");
  CHECK(render(fmeet(fvar("x"), fjoin(fvar("y"), fvar("z")))) == "x & (y | z)");
  CHECK(render(fneg(fmeet(fvar("x"), fvar("y")))) == "(x & y)'");
  CHECK(render(imp_h(fvar("x"), fvar("y"))) == "x -> x & y");
  CHECK(render(imp_h(fvar("x"), fvar("y")), true) == "x ->H y");
}

TEST_CASE("parse errors carry offset and expectations") {
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("x &"), ParseError);
  CHECK_THROWS_AS(parse("(x | y"), ParseError);
  CHECK_THROWS_AS(parse("x y"), ParseError);
  try {
    parse("x & ) y");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset == 4);
    CHECK(!e.expected.empty());
  }
}

TEST_CASE("derived connectives are definitional macros") {
  auto x = fvar("x");
  auto y = fvar("y");
  CHECK(equal(imp_h(x, y), fimp(x, fmeet(x, y))));
  CHECK(equal(star(x), fimp(x, fbot())));
  CHECK(equal(plus(x), fneg(fimp(fneg(x), fbot()))));
  CHECK(equal(iff_h(x, y), fmeet(fimp(x, fmeet(x, y)), fimp(y, fmeet(y, x)))));
}

TEST_CASE("substitution") {
  auto f = parse("x -> y");
  Substitution s{{"x", ftop()}, {"y", fbot()}};
  CHECK(equal(substitute(f, s), parse("1 -> 0")));

  auto g = parse("x & x'");
  Substitution t{{"x", parse("y | z")}};
  CHECK(equal(substitute(g, t), parse("(y | z) & (y | z)'")));

  CHECK_THROWS_AS(substitute(parse("x & w"), t), UnboundVariable);
}

TEST_CASE("substitution composes") {
  auto f = parse("x -> (y & x)");
  Substitution s{{"x", parse("y | z")}, {"y", parse("z'")}};
  Substitution t{{"y", parse("0")}, {"z", parse("w & w")}};
  CHECK(equal(substitute(substitute(f, s), t), substitute(f, compose(t, s))));
}

namespace {

FormulaPtr random_formula(std::mt19937& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth <= 1 ? 2 : 6);
  switch (pick(rng)) {
    case 0: return fbot();
    case 1: return ftop();
    case 2: {
      std::uniform_int_distribution<int> v(0, 2);
      static const char* names[] = {"x", "y", "z"};
      return fvar(names[v(rng)]);
    }
    case 3: return fneg(random_formula(rng, depth - 1));
    case 4: return fmeet(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    case 5: return fjoin(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
    default: return fimp(random_formula(rng, depth - 1), random_formula(rng, depth - 1));
  }
}

}  // namespace

TEST_CASE("round-trip on a generated corpus") {
  std::mt19937 rng(20240817);
  for (int i = 0; i < 500; ++i) {
    auto f = random_formula(rng, 6);
    auto back = parse(render(f));
    CHECK(equal(back, f));
  }
}

TEST_CASE("variables and order") {
  auto f = parse("x -> (a & b1) | x'");
  auto vars = variables(f);
  CHECK(vars == std::set<std::string>{"a", "b1", "x"});
  CHECK(formula_less(fbot(), ftop()));
  CHECK(!formula_less(fvar("x"), fvar("x")));
}

#include <doctest.h>

#include "glil/error.hpp"
#include "glil/formula.hpp"
#include "glil/generators.hpp"
#include "glil/syntax.hpp"
#include "glil/translate.hpp"
#include "glil/veltman.hpp"
#include "support.hpp"

using namespace glil;
using F = Formula;

namespace {

const F p = F::Var(0);

// Hand-rolled depth oracle straight from the recursive definition.
unsigned depth_oracle(const F& f) {
  switch (f.op()) {
    case Op::Bot: case Op::Top: case Op::Var: return 0;
    case Op::Not: return depth_oracle(f.lhs());
    case Op::Box: case Op::Dia: return 1 + depth_oracle(f.lhs());
    case Op::Rhd: return 1 + std::max(depth_oracle(f.lhs()), depth_oracle(f.rhs()));
    default: return std::max(depth_oracle(f.lhs()), depth_oracle(f.rhs()));
  }
}

bool only_core(const F& f) {
  switch (f.op()) {
    case Op::Bot: case Op::Var: return true;
    case Op::Box: return only_core(f.lhs());
    case Op::Imp: return only_core(f.lhs()) && only_core(f.rhs());
    default: return false;
  }
}

bool has_box_or_dia(const F& f) {
  if (f.op() == Op::Box || f.op() == Op::Dia) return true;
  if (is_unary(f.op())) return has_box_or_dia(f.lhs());
  if (is_binary(f.op())) return has_box_or_dia(f.lhs()) || has_box_or_dia(f.rhs());
  return false;
}

}  // namespace

TEST_CASE("parse: binding conventions") {
  CHECK(parse("~p0 |> F") == F::Rhd(F::Not(p), F::Bot()));
  CHECK(parse("[](<>p0 -> p0)") == F::Box(F::Imp(F::Dia(p), p)));
  CHECK(parse("T |> <>T") == F::Rhd(F::Top(), F::Dia(F::Top())));

  const F q = F::Var(1), r = F::Var(2);
  CHECK(parse("p0 & p1 | p2") == F::Or(F::And(p, q), r));
  CHECK(parse("p0 | p1 & p2") == F::And(F::Or(p, q), r));
  CHECK(parse("p0 -> p1 -> p2") == F::Imp(p, F::Imp(q, r)));
  CHECK(parse("p0 <-> p1 -> p2") == F::Iff(p, F::Imp(q, r)));
  CHECK(parse("p0 |> p1 -> p2") == F::Imp(F::Rhd(p, q), r));
  CHECK(parse("[]p0 & p1 |> p2") == F::Rhd(F::And(F::Box(p), q), r));
  CHECK(parse("~[]~p0") == F::Not(F::Box(F::Not(p))));
  CHECK(parse("p") == p);
  CHECK(parse("  p17 ") == F::Var(17));
}

TEST_CASE("parse: unicode aliases") {
  CHECK(parse("□(◇p0 → p0)") == parse("[](<>p0 -> p0)"));
  CHECK(parse("¬p0 ∧ ⊤ ∨ ⊥ ▷ p1 ↔ p2") == parse("~p0 & T | F |> p1 <-> p2"));
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_AS(parse("p0 |> p0 |> p0"), ParseError);
  CHECK_THROWS_AS(parse("(p0"), ParseError);
  CHECK_THROWS_AS(parse("p0 &"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p0 p1"), ParseError);
  CHECK_THROWS_AS(parse("q"), ParseError);
  try {
    parse("T |> T |> T");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 7);
  }
  CHECK_NOTHROW(parse("(T |> T) |> T"));
}

TEST_CASE("render: minimal parentheses") {
  CHECK(render(F::Box(F::Bot())) == "[]F");
  CHECK(render(F::Imp(F::Dia(F::Dia(F::Top())), F::Rhd(F::Top(), F::Dia(F::Top())))) ==
        "<><>T -> T |> <>T");
  CHECK(render(F::Rhd(F::Rhd(F::Top(), F::Top()), F::Top())) == "(T |> T) |> T");
  CHECK(render(F::Imp(F::Imp(p, p), p)) == "(p0 -> p0) -> p0");
  CHECK(render(F::And(p, F::Or(p, p))) == "p0 & (p0 | p0)");
}

TEST_CASE("parse(render(f)) == f on 10^4 random formulas") {
  gen::Rng rng(7);
  gen::FormulaShape shape{1, 25, true, 3, true};
  for (int i = 0; i < 10000; ++i) {
    const F f = gen::random_formula(rng, shape);
    const std::string text = render(f);
    REQUIRE_MESSAGE(parse(text) == f, text);
  }
}

TEST_CASE("equality is structural") {
  CHECK(F::Box(F::Var(3)) == F::Box(F::Var(3)));
  CHECK(F::Box(F::Var(3)) != F::Dia(F::Var(3)));
  CHECK(F::Dia(p) != F::Not(F::Box(F::Not(p))));
  CHECK(std::hash<F>{}(parse("[]p0 -> p1")) == std::hash<F>{}(parse("[]p0 -> p1")));
}

TEST_CASE("stats") {
  const auto box_bot = stats(F::Box(F::Bot()));
  CHECK(box_bot.modal_depth == 1);
  CHECK(box_bot.is_closed);
  CHECK(box_bot.is_box_only);
  CHECK(box_bot.size == 2);

  const auto coded = stats(translate_dagger(p));
  CHECK(coded.modal_depth == depth_oracle(translate_dagger(p)));
  CHECK(coded.modal_depth == 2);
  CHECK(coded.is_closed);
  CHECK_FALSE(coded.is_box_only);

  const auto var = stats(p);
  CHECK(var.variables == std::set<unsigned>{0});
  CHECK(var.modal_depth == 0);
  CHECK_FALSE(var.is_closed);

  gen::Rng rng(11);
  gen::FormulaShape shape{1, 20, true, 2, true};
  for (int i = 0; i < 2000; ++i) {
    const F f = gen::random_formula(rng, shape);
    const auto st = stats(f);
    CHECK(st.modal_depth == depth_oracle(f));
    CHECK(st.is_closed == st.variables.empty());
    CHECK(st.size == size(f));
    CHECK(st.is_box_only == !contains_rhd(f));
  }
}

TEST_CASE("translate_dagger: clauses") {
  CHECK(render(translate_dagger(p)) == "<><>T -> T |> <>T");
  CHECK(translate_dagger(F::Bot()) == F::Bot());
  CHECK(translate_dagger(F::Box(F::Bot())) ==
        F::Box(F::Imp(F::Dia(F::Dia(F::Top())), F::Bot())));
  CHECK(translate_dagger(F::Imp(p, F::Bot())) == F::Imp(coded_variable(), F::Bot()));
}

TEST_CASE("translate_dagger: rejects |> and other variables") {
  CHECK_THROWS_AS(translate_dagger(parse("p0 |> p0")), PreconditionError);
  CHECK_THROWS_AS(translate_dagger(parse("[]p1")), PreconditionError);
}

TEST_CASE("translate_dagger: closed, |> iff p, linear size") {
  gen::Rng rng(3);
  gen::FormulaShape shape{1, 20, true, 1, false};
  for (int i = 0; i < 3000; ++i) {
    const F a = gen::random_formula(rng, shape);
    const F t = translate_dagger(a);
    CHECK(is_closed(t));
    CHECK(contains_rhd(t) == !is_closed(a));
    CHECK(size(t) <= 8 * size(to_core(a)));
  }
  CHECK(size(translate_dagger(p)) == 8);
}

TEST_CASE("to_core: core connectives only, truth preserved") {
  gen::Rng rng(5);
  gen::FormulaShape shape{1, 16, true, 2, false};
  for (int i = 0; i < 300; ++i) {
    const F f = gen::random_formula(rng, shape);
    const F c = to_core(f);
    CHECK(only_core(c));
    const VeltmanModel m = random_veltman(1 + rng() % 7, 0.6, rng(), 2);
    for (World x = 0; x < m.size(); ++x)
      CHECK(testing::naive_il(m, x, f) == testing::naive_il(m, x, c));
  }
}

TEST_CASE("box_as_rhd: examples") {
  CHECK(box_as_rhd(F::Box(F::Bot())) == F::Rhd(F::Not(F::Bot()), F::Bot()));
  CHECK(box_as_rhd(F::Bot()) == F::Bot());
  CHECK(render(box_as_rhd(parse("[][]F"))) == "~(~F |> F) |> F");
}

TEST_CASE("box_as_rhd: [][]F instance agrees on 200 random Veltman models") {
  const F f = parse("[][]F");
  const F g = parse("~(~F |> F) |> F");
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const VeltmanModel m = random_veltman(1 + seed % 10, 0.5, seed);
    for (World x = 0; x < m.size(); ++x) CHECK(testing::naive_il(m, x, f) == testing::naive_il(m, x, g));
  }
}

TEST_CASE("box_as_rhd: preserves truth on closed formulas of depth <= 3") {
  gen::Rng rng(19);
  gen::FormulaShape shape{1, 12, true, 0, true};
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 200; ++seed) {
    const F f = gen::random_formula(rng, shape);
    if (modal_depth(f) > 3) continue;
    const F g = box_as_rhd(f);
    CHECK_FALSE(has_box_or_dia(g));
    const VeltmanModel m = random_veltman(1 + seed % 9, 0.5, seed);
    for (World x = 0; x < m.size(); ++x) CHECK(mc_il(m, x, f) == mc_il(m, x, g));
    ++checked;
  }
}

TEST_CASE("diamond agrees with ~[]~ on random models") {
  gen::Rng rng(23);
  gen::FormulaShape shape{1, 10, true, 1, true};
  for (int i = 0; i < 200; ++i) {
    const F a = gen::random_formula(rng, shape);
    const VeltmanModel m = random_veltman(1 + i % 8, 0.5, rng());
    IlEvaluator eval(m);
    for (World x = 0; x < m.size(); ++x)
      CHECK(eval.holds(x, F::Dia(a)) == eval.holds(x, F::Not(F::Box(F::Not(a)))));
  }
}

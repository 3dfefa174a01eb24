#include <doctest.h>

#include "glil/axioms.hpp"
#include "glil/error.hpp"
#include "glil/generators.hpp"
#include "glil/reduction.hpp"
#include "glil/syntax.hpp"
#include "glil/veltman.hpp"
#include "support.hpp"

using namespace glil;
using F = Formula;

namespace {

// e R b R n (b = flat, n = natural) with S_e reflexive on succ(e) plus
// (b, n) and (n, b); S_b = {(n, n)}.
VeltmanModel coded_chain() {
  VeltmanModel m(3);
  m.r.insert(0, 1);
  m.r.insert(1, 2);
  m.r.insert(0, 2);
  m.s[0].insert(1, 1);
  m.s[0].insert(2, 2);
  m.s[0].insert(1, 2);
  m.s[0].insert(2, 1);
  m.s[1].insert(2, 2);
  return m;
}

std::vector<AxiomInstance> closed_triples() {
  const auto pool = testing::small_closed_pool();
  std::vector<Formula> extended = pool;
  extended.push_back(parse("T |> <>T"));
  extended.push_back(parse("<>T |> []F"));
  std::vector<AxiomInstance> out;
  for (std::size_t i = 0; i < extended.size(); i += 2)
    for (std::size_t j = 0; j < extended.size(); j += 3)
      for (const auto& c : extended) out.push_back({extended[i], extended[j], c});
  return out;
}

}  // namespace

TEST_CASE("validate_veltman: condition 1 and condition 2") {
  CHECK(validate_veltman(coded_chain()).clean());

  VeltmanModel bad1 = coded_chain();
  bad1.s[1].insert(0, 2);  // 1 R 0 fails
  CHECK(validate_veltman(bad1).has("condition 1 at (1,0,2)"));

  VeltmanModel bad2 = coded_chain();
  bad2.s[0].erase(1, 2);
  bad2.s[0].erase(2, 1);
  CHECK(validate_veltman(bad2).has("condition 2 at (0,1,2)"));
}

TEST_CASE("validate_veltman: remaining conditions") {
  VeltmanModel refl = coded_chain();
  refl.s[0].erase(1, 1);
  CHECK(validate_veltman(refl).has("S-reflexivity at (0,1)"));

  VeltmanModel trans(4);
  for (World y = 1; y < 4; ++y) {
    trans.r.insert(0, y);
    trans.s[0].insert(y, y);
  }
  trans.s[0].insert(1, 2);
  trans.s[0].insert(2, 3);
  CHECK(validate_veltman(trans).has("S-transitivity at (0,1,2,3)"));

  VeltmanModel rt(3);
  rt.r.insert(0, 1);
  rt.r.insert(1, 2);
  rt.s[0].insert(1, 1);
  const Diagnostics d = validate_veltman(rt);
  CHECK(d.has("R-transitivity at (0,1,2)"));

  VeltmanModel loop(1);
  loop.r.insert(0, 0);
  CHECK(validate_veltman(loop).has("R-irreflexivity at 0"));
}

TEST_CASE("mc_il: examples") {
  const F j5 = instantiate(Scheme::J5, parse("p0 & <>T"), F::Top(), F::Top());
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const VeltmanModel m = random_veltman(1 + seed % 9, 0.5, seed);
    for (World x = 0; x < m.size(); ++x) CHECK(mc_il(m, x, j5));
  }

  const VeltmanModel single(1);
  CHECK(mc_il(single, 0, parse("T |> <>T")));

  const VeltmanModel chain = coded_chain();
  CHECK(mc_il(chain, 0, parse("T |> <>T")));
  CHECK_THROWS_AS(mc_il(chain, 3, F::Top()), PreconditionError);
}

TEST_CASE("mc_il agrees with the naive per-world oracle") {
  gen::Rng rng(41);
  gen::FormulaShape shape{1, 14, true, 2, true};
  for (int i = 0; i < 400; ++i) {
    const VeltmanModel m = random_veltman(1 + i % 11, 0.2 + 0.1 * (i % 7), rng(), 2);
    IlEvaluator eval(m);
    for (int k = 0; k < 5; ++k) {
      const F f = gen::random_formula(rng, shape);
      for (World x = 0; x < m.size(); ++x) REQUIRE(eval.holds(x, f) == testing::naive_il(m, x, f));
    }
  }
}

TEST_CASE("mc_il on |>-free formulas agrees with mc_gl on the reduct") {
  gen::Rng rng(43);
  gen::FormulaShape shape{1, 14, true, 2, false};
  for (int i = 0; i < 300; ++i) {
    const VeltmanModel m = random_veltman(1 + i % 10, 0.5, rng(), 2);
    const KripkeModel k = reduct(m);
    const F f = gen::random_formula(rng, shape);
    for (World x = 0; x < m.size(); ++x) CHECK(mc_il(m, x, f) == mc_gl(k, x, f));
  }
}

TEST_CASE("random_veltman: examples") {
  const VeltmanModel one = random_veltman(1, 0.7, 9);
  CHECK(one.size() == 1);
  CHECK(one.r.empty());
  CHECK(one.s[0].empty());

  CHECK(validate_veltman(random_veltman(6, 0.5, 42)).clean());

  for (std::size_t n = 1; n <= 8; ++n) {
    const VeltmanModel full = random_veltman(n, 1.0, n);
    CHECK(full.r.count() == n * (n - 1) / 2);
    const auto h = heights(full.r);
    std::vector<unsigned> sorted(h.begin(), h.end());
    std::sort(sorted.begin(), sorted.end());
    for (unsigned i = 0; i < n; ++i) CHECK(sorted[i] == i);
  }
  CHECK_THROWS_AS(random_veltman(0, 0.5, 1), PreconditionError);
}

TEST_CASE("random_veltman: deterministic in the seed, always valid") {
  CHECK(random_veltman(9, 0.4, 1234) == random_veltman(9, 0.4, 1234));
  CHECK_FALSE(random_veltman(9, 0.4, 1234) == random_veltman(9, 0.4, 1235));
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const VeltmanModel m = random_veltman(1 + seed % 12, (seed % 10) / 9.0, seed, 1 + seed % 3);
    REQUIRE(validate_veltman(m).clean());
  }
}

TEST_CASE("check_axiom_sweep: examples") {
  const std::vector<AxiomInstance> top{{F::Top(), F::Top(), F::Top()}};
  const std::vector<AxiomInstance> dt{{parse("<>T"), F::Top(), F::Top()}};
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const VeltmanModel m = random_veltman(1 + seed % 10, 0.5, seed);
    CHECK(check_axiom_sweep(m, Scheme::J5, top).clean());
    CHECK(check_axiom_sweep(m, Scheme::BoxRhd, dt).clean());
  }

  KripkeModel single(1);
  single.val[0].insert(0);
  const LiftedModel lifted = lift_to_veltman(single);
  const Diagnostics d = check_axiom_sweep(lifted.model, Scheme::F, top);
  CHECK_FALSE(d.clean());
  CHECK(d.has("F at 0"));
  CHECK(d.violations.front().detail == "<>T -> ~(T |> <>T)");
}

TEST_CASE("IL-valid schemes never fail on random models") {
  const auto instances = closed_triples();
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const VeltmanModel m = random_veltman(1 + seed % 10, 0.3 + 0.05 * (seed % 10), seed);
    for (Scheme s : all_schemes()) {
      if (!is_il_valid_scheme(s)) continue;
      const Diagnostics d = check_axiom_sweep(m, s, instances);
      REQUIRE_MESSAGE(d.clean(), scheme_name(s), " ", d.violations.front().detail);
    }
  }
}

TEST_CASE("scheme names") {
  for (Scheme s : all_schemes()) CHECK(scheme_from_name(scheme_name(s)) == s);
  CHECK_FALSE(scheme_from_name("J6"));
}

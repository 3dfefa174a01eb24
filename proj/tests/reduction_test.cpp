#include <doctest.h>

#include "glil/error.hpp"
#include "glil/generators.hpp"
#include "glil/json_io.hpp"
#include "glil/reduction.hpp"
#include "glil/syntax.hpp"
#include "glil/translate.hpp"
#include "support.hpp"

using namespace glil;
using F = Formula;

namespace {

KripkeModel single_world(bool p) {
  KripkeModel m(1);
  if (p) m.val[0].insert(0);
  m.root = 0;
  return m;
}

}  // namespace

TEST_CASE("lift_to_veltman: single world") {
  for (bool p : {false, true}) {
    const LiftedModel l = lift_to_veltman(single_world(p));
    REQUIRE(l.model.size() == 3);
    CHECK(l.old_worlds == std::vector<World>{0});
    CHECK(l.flats.at(0) == 1);
    CHECK(l.naturals.at(0) == 2);
    CHECK(l.root == 0);
    CHECK(validate_veltman(l.model).clean());

    CHECK(l.model.r.contains(0, 1));
    CHECK(l.model.r.contains(1, 2));
    CHECK(l.model.r.contains(0, 2));
    CHECK(l.model.r.count() == 3);
    CHECK(l.model.s[1].pairs() == std::vector<std::pair<World, World>>{{2, 2}});
    CHECK(l.model.s[2].empty());
    CHECK(l.model.s[0].contains(2, 1) == p);
    for (World w = 0; w < 3; ++w) CHECK(l.model.val[w].empty());

    CHECK(mc_il(l.model, 0, coded_variable()) == p);
    CHECK(mc_il(l.model, 0, parse("<><>T")));
  }
}

TEST_CASE("lift_to_veltman: preconditions") {
  KripkeModel forest(2);
  CHECK_THROWS_AS(lift_to_veltman(forest), PreconditionError);

  KripkeModel two_vars = testing::chain(2);
  two_vars.val[1].insert(1);
  CHECK_THROWS_AS(lift_to_veltman(two_vars), PreconditionError);

  KripkeModel diamond(4);
  diamond.r = tree_closure(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(lift_to_veltman(diamond), PreconditionError);
}

TEST_CASE("lift_to_veltman: every old world sees <><>T, flats and naturals do not") {
  gen::Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel n = gen::random_tree_model(rng, 7);
    const LiftedModel l = lift_to_veltman(n);
    REQUIRE(validate_veltman(l.model).clean());
    const WorldSet dd = IlEvaluator(l.model).truth_set(parse("<><>T"));
    for (World w = 0; w < l.model.size(); ++w) CHECK(dd[w] == (w < n.size()));
    CHECK(l.flats.size() == endpoints(n.r).size());
    CHECK(l.model.size() == n.size() + 2 * l.flats.size());
  }
}

TEST_CASE("clause 5: the natural copy reaches the flat copy exactly under p") {
  gen::Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel n = gen::random_tree_model(rng, 7);
    const LiftedModel l = lift_to_veltman(n);
    for (World x = 0; x < n.size(); ++x) {
      for (const auto& [e, flat] : l.flats) {
        const World nat = l.naturals.at(e);
        const bool sees = x == e || n.r.contains(x, e);
        CHECK(l.model.s[x].contains(nat, flat) == (sees && n.forces(x, 0)));
      }
    }
  }
}

TEST_CASE("the coded variable defines p at old worlds") {
  gen::Rng rng(13);
  for (int i = 0; i < 300; ++i) {
    const KripkeModel n = gen::random_tree_model(rng, 8);
    const LiftedModel l = lift_to_veltman(n);
    IlEvaluator eval(l.model);
    for (World x = 0; x < n.size(); ++x) CHECK(eval.holds(x, coded_variable()) == n.forces(x, 0));
  }
}

TEST_CASE("lift truth lemma, small sample") {
  const auto pool = gen::enumerate_core_formulas(6);
  gen::Rng rng(17);
  for (int i = 0; i < 40; ++i) {
    const KripkeModel n = gen::random_tree_model(rng, 5);
    const LiftedModel l = lift_to_veltman(n);
    IlEvaluator eval(l.model);
    for (const F& a : pool) {
      const F t = translate_dagger(a);
      for (World x = 0; x < n.size(); ++x) REQUIRE(testing::naive_gl(n, x, a) == eval.holds(x, t));
    }
  }
}

TEST_CASE("project_to_gl: examples") {
  // Minimal-height world: W' = {w}.
  const VeltmanModel one(1);
  const Projection p1 = project_to_gl(one, 0);
  CHECK(p1.model.size() == 1);
  CHECK(p1.origin == std::vector<World>{0});
  CHECK(p1.model.root == World{0});

  // Lifted single p-world: W' is the old root, which forces p.
  const LiftedModel l = lift_to_veltman(single_world(true));
  const Projection p2 = project_to_gl(l.model, 2);
  CHECK(p2.origin == std::vector<World>{0, 2});
  CHECK(p2.model.forces(0, 0));
  CHECK(p2.model.root == World{1});
  CHECK(validate_gl_frame(p2.model).clean());

  CHECK_THROWS_AS(project_to_gl(one, 1), PreconditionError);
}

// The lemma holds at w and at every x in W' that does not see a w outside
// the <><>T-worlds; such an x sees w in the projection but the relativized
// box skips it.
TEST_CASE("projection truth lemma, small sample") {
  const auto pool = gen::enumerate_core_formulas(6);
  const F ddt = parse("<><>T");
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const VeltmanModel m = random_veltman(1 + seed % 8, 0.5, seed, 1, 0.3);
    IlEvaluator eval(m);
    for (World w = 0; w < m.size(); ++w) {
      const Projection p = project_to_gl(m, w);
      CHECK(validate_gl_frame(p.model).clean());
      const bool w_inner = eval.holds(w, ddt);
      for (const F& a : pool) {
        const F t = translate_dagger(a);
        for (World i = 0; i < p.model.size(); ++i) {
          if (!w_inner && m.r.contains(p.origin[i], w)) continue;
          REQUIRE(eval.holds(p.origin[i], t) == testing::naive_gl(p.model, i, a));
        }
      }
    }
  }
}

TEST_CASE("projection truth lemma fails at worlds seeing a non-<><>T root") {
  VeltmanModel m(4);
  m.r.insert(0, 2);
  m.r.insert(0, 3);
  m.r.insert(2, 3);
  for (World y : {2, 3})
    for (World z : {2, 3}) m.s[0].insert(y, z);
  m.s[2].insert(3, 3);
  REQUIRE(validate_veltman(m).clean());

  const Projection p = project_to_gl(m, 2);
  CHECK(p.origin == std::vector<World>{0, 2});
  const F a = parse("[]F");
  CHECK(mc_il(m, 0, translate_dagger(a)));
  CHECK_FALSE(mc_gl(p.model, 0, a));
  // At w itself the lemma holds.
  CHECK(mc_il(m, 2, translate_dagger(a)) == mc_gl(p.model, 1, a));
}

TEST_CASE("projecting a lifted tree at its root recovers the tree") {
  gen::Rng rng(29);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel n = gen::random_tree_model(rng, 10);
    const LiftedModel l = lift_to_veltman(n);
    const Projection p = project_to_gl(l.model, l.root);
    REQUIRE(p.origin == l.old_worlds);
    CHECK(p.model.r == n.r);
    CHECK(p.model.val == n.val);
  }
}

TEST_CASE("lift truth lemma on random trees up to 10 worlds") {
  const auto pool = gen::enumerate_core_formulas(8);
  std::vector<F> translated;
  for (const F& a : pool) translated.push_back(translate_dagger(a));
  gen::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const KripkeModel n = gen::random_tree_model(rng, 10);
    const LiftedModel l = lift_to_veltman(n);
    IlEvaluator eval(l.model);
    for (std::size_t k = 0; k < pool.size(); ++k) {
      const WorldSet gl = truth_set_gl(n, pool[k]);
      const WorldSet& il = eval.truth_set(translated[k]);
      for (World x = 0; x < n.size(); ++x) REQUIRE(gl[x] == il[x]);
    }
  }
}

TEST_CASE("reduce_and_certify: invalid side") {
  const CertifiedReduction c = reduce_and_certify(parse("[]F"));
  CHECK_FALSE(c.gl_verdict.valid);
  REQUIRE(c.lifted);
  CHECK(c.recheck);
  CHECK_FALSE(c.smoke_test);
  CHECK_FALSE(mc_il(c.lifted->model, c.lifted->root, c.translated));
  CHECK(c.translated == translate_dagger(parse("[]F")));
}

TEST_CASE("reduce_and_certify: valid side") {
  const F lob = parse("[]([]p0 -> p0) -> []p0");
  ReduceOptions opt;
  opt.smoke_models = 20;
  opt.seed = 3;
  const CertifiedReduction c = reduce_and_certify(lob, opt);
  CHECK(c.gl_verdict.valid);
  CHECK_FALSE(c.lifted);
  CHECK(check_proof_trace(c.gl_verdict.proof_trace, lob));
  REQUIRE(c.smoke_test);
  CHECK(c.smoke_test->models == 20);
  CHECK(c.smoke_test->failures == 0);
  CHECK(c.smoke_test->worlds_checked >= 20);
}

TEST_CASE("reduce_and_certify: preconditions") {
  CHECK_THROWS_AS(reduce_and_certify(parse("p0 |> p0")), PreconditionError);
  CHECK_THROWS_AS(reduce_and_certify(parse("[]p1 -> p1")), PreconditionError);
}

TEST_CASE("reduce_and_certify agrees with the GL verdict on the size <= 5 pool") {
  ReduceOptions opt;
  opt.smoke_models = 5;
  for (const F& a : gen::enumerate_core_formulas(5)) {
    const CertifiedReduction c = reduce_and_certify(a, opt);
    CHECK(c.gl_verdict.valid == prove_gl(a).valid);
    if (!c.gl_verdict.valid) CHECK(c.recheck);
  }
}

TEST_CASE("json: models round trip") {
  gen::Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    const KripkeModel k = gen::random_tree_model(rng, 9);
    const io::Json jk = io::to_json(k);
    CHECK_FALSE(io::is_veltman_document(jk));
    const KripkeModel back = io::kripke_from_json(io::Json::parse(jk.dump()));
    CHECK(back.r == k.r);
    CHECK(back.val == k.val);
    CHECK(back.root == k.root);

    const VeltmanModel v = random_veltman(1 + i % 10, 0.5, rng(), 2);
    const io::Json jv = io::to_json(v);
    CHECK(io::is_veltman_document(jv));
    CHECK(io::veltman_from_json(io::Json::parse(jv.dump())) == v);
  }
  const LiftedModel l = lift_to_veltman(single_world(true));
  const io::Json jl = io::to_json(l);
  CHECK(io::veltman_from_json(jl) == l.model);
  CHECK(jl["old_worlds"] == io::Json::array({0}));
}

TEST_CASE("json: malformed documents") {
  using io::Json;
  for (const char* text :
       {R"({})", R"({"worlds":[0,2]})", R"({"worlds":[0,1],"R":[[0,5]]})", R"({"worlds":[0],"R":[[0]]})",
        R"({"worlds":[0],"val":{"x":[0]}})", R"({"worlds":[0],"val":{"0":[-1]}})", R"({"worlds":"0"})",
        R"({"worlds":[0,0]})", R"({"worlds":[0],"root":3})"}) {
    CHECK_THROWS_AS_MESSAGE(io::kripke_from_json(Json::parse(text)), FormatError, text);
  }
  CHECK_THROWS_AS(io::veltman_from_json(Json::parse(R"({"worlds":[0,1],"S":{"2":[]}})")), FormatError);
  CHECK_THROWS_AS(io::veltman_from_json(Json::parse(R"({"worlds":[0,1],"S":[]})")), FormatError);
}

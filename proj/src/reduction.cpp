#include "glil/reduction.hpp"

#include <algorithm>

#include "glil/error.hpp"
#include "glil/generators.hpp"
#include "glil/syntax.hpp"
#include "glil/translate.hpp"

namespace glil {

LiftedModel lift_to_veltman(const KripkeModel& n) {
  const auto root = tree_root(n);
  if (!root) throw PreconditionError("lift_to_veltman: model is not tree-like");
  for (const auto& vs : n.val)
    for (unsigned v : vs)
      if (v != 0) throw PreconditionError("lift_to_veltman: model forces p" + std::to_string(v));

  const std::size_t old = n.size();
  const std::vector<World> ends = endpoints(n.r);
  const std::size_t total = old + 2 * ends.size();

  LiftedModel out;
  out.root = *root;
  out.model = VeltmanModel(total);
  for (World x = 0; x < old; ++x) out.old_worlds.push_back(x);
  for (std::size_t i = 0; i < ends.size(); ++i) {
    out.flats[ends[i]] = old + i;
    out.naturals[ends[i]] = old + ends.size() + i;
  }

  Relation& r = out.model.r;
  for (auto [x, y] : n.r.pairs()) r.insert(x, y);
  for (World e : ends) {
    r.insert(e, out.flats[e]);
    r.insert(out.flats[e], out.naturals[e]);
  }
  r.close_transitively();

  for (World e : ends) {
    out.model.s[out.flats[e]].insert(out.naturals[e], out.naturals[e]);
  }

  for (World x = 0; x < old; ++x) {
    const std::vector<World> succ = r.successors(x);
    Relation& sx = out.model.s[x];
    for (World y : succ)
      for (World z : succ)
        if (r.contains(y, z)) sx.insert(y, z);
    if (n.forces(x, 0)) {
      for (World e : ends)
        if (x == e || n.r.contains(x, e)) sx.insert(out.naturals[e], out.flats[e]);
    }
    sx.add_identity_on(succ);
    sx.close_transitively();
  }
  return out;
}

Projection project_to_gl(const VeltmanModel& m, World w) {
  if (w >= m.size()) throw PreconditionError("project_to_gl: world " + std::to_string(w) + " not in model");
  IlEvaluator eval(m);
  const Formula ddt = Formula::Dia(Formula::Dia(Formula::Top()));
  const WorldSet& inner = eval.truth_set(ddt);
  const WorldSet& coded = eval.truth_set(coded_variable());

  Projection p;
  for (World x = 0; x < m.size(); ++x) {
    if (x == w || inner[x]) {
      if (x == w) p.root = p.origin.size();
      p.origin.push_back(x);
    }
  }
  p.model = KripkeModel(p.origin.size());
  for (World i = 0; i < p.origin.size(); ++i) {
    for (World j = 0; j < p.origin.size(); ++j)
      if (m.r.contains(p.origin[i], p.origin[j])) p.model.r.insert(i, j);
    if (coded[p.origin[i]]) p.model.val[i].insert(0);
  }
  p.model.root = p.root;
  return p;
}

CertifiedReduction reduce_and_certify(const Formula& a, const ReduceOptions& options) {
  CertifiedReduction out;
  out.input = a;
  out.translated = translate_dagger(a);
  out.gl_verdict = prove_gl(a);

  if (!out.gl_verdict.valid) {
    const KripkeModel& cm = *out.gl_verdict.countermodel;
    out.lifted = lift_to_veltman(cm);
    out.recheck = !mc_il(out.lifted->model, out.lifted->root, out.translated);
    if (!out.recheck) {
      throw CertificationFailure("lifted countermodel does not refute " + render(out.translated) +
                                 " at its root");
    }
    return out;
  }

  SmokeTest smoke;
  gen::Rng rng(options.seed);
  const unsigned max_worlds = std::max(1u, options.smoke_max_worlds);
  for (unsigned k = 0; k < options.smoke_models; ++k) {
    const std::size_t worlds = 1 + rng() % max_worlds;
    const double density = static_cast<double>(rng() % 9 + 2) / 10.0;
    const VeltmanModel m = random_veltman(worlds, density, rng(), 0);
    const WorldSet truth = IlEvaluator(m).truth_set(out.translated);
    ++smoke.models;
    smoke.worlds_checked += worlds;
    for (World x = 0; x < worlds; ++x)
      if (!truth[x]) ++smoke.failures;
  }
  out.smoke_test = smoke;
  if (smoke.failures != 0) {
    throw CertificationFailure("translation of the GL theorem " + render(a) +
                               " fails on a random Veltman model");
  }
  return out;
}

}  // namespace glil

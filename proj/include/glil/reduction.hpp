#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "glil/formula.hpp"
#include "glil/kripke.hpp"
#include "glil/prover.hpp"
#include "glil/veltman.hpp"

namespace glil {

/// Veltman model obtained from a finite tree GL model by gluing a two-step
/// R-chain e -> flat(e) -> natural(e) above every endpoint e. The old worlds
/// keep their indices 0..n-1; flats follow, then naturals.
struct LiftedModel {
  VeltmanModel model;
  std::vector<World> old_worlds;
  std::map<World, World> flats;     // endpoint -> flat copy
  std::map<World, World> naturals;  // endpoint -> natural copy
  World root = 0;
};

/// Builds the lifted model:
///   R' = transitive closure of R + {(e, flat e)} + {(flat e, natural e)};
///   S'_{flat e} = {(natural e, natural e)},  S'_{natural e} = {};
///   for an old world x, S'_x is the reflexive transitive closure on
///   succ(x) of R' restricted to succ(x) plus the pairs
///   (natural e, flat e) for every endpoint e with x R= e, when x forces p0.
/// The lifted model carries no valuation.
///
/// Throws PreconditionError unless n is tree-like and forces only p0.
LiftedModel lift_to_veltman(const KripkeModel& n);

struct Projection {
  KripkeModel model;
  World root = 0;
  /// origin[i] is the world of the Veltman model that became world i.
  std::vector<World> origin;
};

/// GL model on W' = {w} + {x : x forces <><>T}, with R restricted to W' and
/// p0 true at x iff x forces the coded variable. Worlds keep their relative
/// order. Throws PreconditionError if w is not a world.
Projection project_to_gl(const VeltmanModel& m, World w);

struct SmokeTest {
  unsigned models = 0;
  std::size_t worlds_checked = 0;
  std::size_t failures = 0;
};

struct ReduceOptions {
  unsigned smoke_models = 50;
  unsigned smoke_max_worlds = 8;
  std::uint64_t seed = 0;
};

/// Outcome of translating a one-variable GL formula, with evidence.
/// Invalid side: the lifted countermodel and the re-check of the translated
/// formula at its root. Valid side: the GL proof trace and a heuristic
/// check of the translated formula on random Veltman models.
struct CertifiedReduction {
  Formula input = Formula::Bot();
  Formula translated = Formula::Bot();
  GlVerdict gl_verdict;
  std::optional<LiftedModel> lifted;
  bool recheck = false;
  std::optional<SmokeTest> smoke_test;
};

/// Throws PreconditionError on |> or variables other than p0, and
/// CertificationFailure if the lifted model does not refute the translation
/// at the countermodel root or a random model refutes a translated GL
/// theorem.
CertifiedReduction reduce_and_certify(const Formula& a, const ReduceOptions& options = {});

}  // namespace glil

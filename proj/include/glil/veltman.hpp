#pragma once

#include <cstdint>
#include <set>
#include <unordered_map>
#include <vector>

#include "glil/diagnostics.hpp"
#include "glil/formula.hpp"
#include "glil/kripke.hpp"
#include "glil/relation.hpp"

namespace glil {

/// Veltman model <W, R, {S_x}, val>. Worlds are 0..size()-1 and s[x] is the
/// relation S_x, stored as its own matrix over all worlds.
///
/// Frame conditions (checked by validate_veltman):
///   R transitive and irreflexive;
///   y S_x z implies x R y and x R z;
///   S_x reflexive on {y : x R y} and transitive;
///   x R y R z implies y S_x z.
struct VeltmanModel {
  Relation r;
  std::vector<Relation> s;
  std::vector<std::set<unsigned>> val;

  VeltmanModel() = default;
  explicit VeltmanModel(std::size_t n) : r(n), s(n, Relation(n)), val(n) {}

  std::size_t size() const noexcept { return val.size(); }
  bool forces(World w, unsigned var) const { return val[w].count(var) != 0; }

  friend bool operator==(const VeltmanModel&, const VeltmanModel&) = default;
};

/// Reports, with witnesses: "R-transitivity at (x,y,z)", "R-irreflexivity at
/// x", "condition 1 at (x,y,z)", "S-reflexivity at (x,y)",
/// "S-transitivity at (x,y,z,w)" (y S_x z S_x w but not y S_x w) and
/// "condition 2 at (x,y,z)".
Diagnostics validate_veltman(const VeltmanModel& m);

/// Computes truth sets for one model, caching results per formula node so
/// that shared subterms (e.g. across many translated formulas) are evaluated
/// once. Not thread-safe; use one evaluator per thread.
class IlEvaluator {
 public:
  explicit IlEvaluator(const VeltmanModel& m) : m_(m) {}

  const WorldSet& truth_set(const Formula& f);
  bool holds(World x, const Formula& f);

 private:
  WorldSet compute(const Formula& f);

  const VeltmanModel& m_;
  // Keeps the formula alive so its node address cannot be reused.
  std::unordered_map<const Formula::Node*, std::pair<Formula, WorldSet>> cache_;
};

/// Truth at x. A |> B holds at x iff every R-successor of x forcing A has an
/// S_x-successor forcing B. Throws PreconditionError if x is not a world.
bool mc_il(const VeltmanModel& m, World x, const Formula& f);

/// The GL model <W, R, val> underlying m.
KripkeModel reduct(const VeltmanModel& m);

/// Deterministic in `seed`. R is a random sub-order of a random strict total
/// order (each pair kept with probability edge_density), transitively
/// closed. Each S_x starts from {(y,z) : x R y R z} plus the identity on the
/// successors of x, receives random extra pairs from succ(x) x succ(x) with
/// probability s_density, and is closed transitively. Each world forces
/// each of the first `variables` variables with probability 1/2.
/// Always satisfies validate_veltman.
VeltmanModel random_veltman(std::size_t n_worlds, double edge_density, std::uint64_t seed,
                            unsigned variables = 1, double s_density = 0.3);

}  // namespace glil

#pragma once

#include <optional>
#include <set>
#include <vector>

#include "glil/diagnostics.hpp"
#include "glil/formula.hpp"
#include "glil/relation.hpp"

namespace glil {

/// Finite Kripke model for GL. Worlds are 0..size()-1; `val[w]` is the set of
/// variable indices true at w. A GL frame is transitive and irreflexive.
struct KripkeModel {
  Relation r;
  std::vector<std::set<unsigned>> val;
  std::optional<World> root;

  KripkeModel() = default;
  explicit KripkeModel(std::size_t n) : r(n), val(n) {}

  std::size_t size() const noexcept { return val.size(); }
  bool forces(World w, unsigned var) const { return val[w].count(var) != 0; }

  friend bool operator==(const KripkeModel&, const KripkeModel&) = default;
};

/// Reports "transitivity at (x,y,z)" and "irreflexivity at x" failures.
Diagnostics validate_gl_frame(const KripkeModel& m);

/// Length of the longest outgoing R-chain for every world. Precondition: R is
/// acyclic (any GL frame).
std::vector<unsigned> heights(const Relation& r);

/// Worlds without R-successors, ascending.
std::vector<World> endpoints(const Relation& r);

/// The root if R is exactly the transitive closure of a rooted tree whose
/// root reaches every other world; std::nullopt otherwise.
std::optional<World> tree_root(const KripkeModel& m);

/// Builds R as the transitive closure of the given parent -> child edges.
Relation tree_closure(std::size_t n, const std::vector<std::pair<World, World>>& edges);

/// Truth set of a |>-free formula. Throws PreconditionError on |>.
WorldSet truth_set_gl(const KripkeModel& m, const Formula& f);

/// Throws PreconditionError on |> or if x is not a world of m.
bool mc_gl(const KripkeModel& m, World x, const Formula& f);

}  // namespace glil

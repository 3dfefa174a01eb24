#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "glil/formula.hpp"
#include "glil/kripke.hpp"

namespace glil::gen {

using Rng = std::mt19937_64;

/// All formulas over {F, p0, ->, []} with size in [1, max_size], grouped by
/// increasing size.
std::vector<Formula> enumerate_core_formulas(unsigned max_size);

struct FormulaShape {
  unsigned min_size = 1;
  unsigned max_size = 10;
  /// Use T ~ & | <-> <> besides F -> [].
  bool full_connectives = true;
  /// Variables p0..p{variables-1}; 0 gives closed formulas.
  unsigned variables = 1;
  bool allow_rhd = false;
};

/// Random formula whose size is uniform in [min_size, max_size].
Formula random_formula(Rng& rng, const FormulaShape& shape);

/// Parent arrays (parent[0] == -1, parent[i] < i) of all rooted unlabeled
/// trees with exactly n nodes, one per isomorphism class.
std::vector<std::vector<int>> enumerate_tree_shapes(unsigned n);

/// Tree-like GL model from a parent array; world 0 is the root.
KripkeModel tree_model(const std::vector<int>& parent, const std::vector<bool>& p0);

/// Every tree shape with at most max_worlds worlds under every p0-valuation,
/// at most cap_per_shape valuations per shape.
std::vector<KripkeModel> enumerate_tree_models(unsigned max_worlds, std::size_t cap_per_shape);

/// Random tree with between 1 and max_worlds worlds and random p0-valuation.
KripkeModel random_tree_model(Rng& rng, unsigned max_worlds);

}  // namespace glil::gen

#pragma once

#include <vector>

#include "glil/formula.hpp"

namespace glil {

/// Truth of a closed, |>-free formula at a world of height h in any GL
/// model. []A holds at h iff A holds at every h' < h.
///
/// Throws PreconditionError on open formulas or |>.
bool eval_closed_at_height(const Formula& f, unsigned h);

/// Truth at heights 0..max_height, computed in one pass.
std::vector<bool> closed_truth_profile(const Formula& f, unsigned max_height);

/// Height profile of a closed formula together with an equivalent Boolean
/// combination of formulas []^n F.
struct NormalForm {
  unsigned depth = 0;
  /// below[h] is the truth value at height h, for h < depth.
  std::vector<bool> below;
  /// Truth value at every height >= depth.
  bool stable = false;
  Formula formula = Formula::Bot();

  bool true_at(unsigned h) const { return h < depth ? static_cast<bool>(below[h]) : stable; }
};

/// Maximal runs of true heights [a, b) become []^b F & ~[]^a F, a final run
/// [a, inf) becomes ~[]^a F; the runs are joined with |. Everywhere true
/// gives T, nowhere true gives F.
///
/// Throws PreconditionError on open formulas or |>.
NormalForm normal_form_closed(const Formula& f);

}  // namespace glil

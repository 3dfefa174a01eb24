#pragma once

#include <string>

#include "glil/kripke.hpp"
#include "glil/veltman.hpp"

namespace glil::dot {

/// Graphviz digraph; R edges solid, worlds labeled with their true variables.
std::string to_dot(const KripkeModel& m);

/// As above, plus one dashed edge per S_x pair, labeled x. Reflexive S_x
/// pairs are omitted unless `show_reflexive` is set.
std::string to_dot(const VeltmanModel& m, bool show_reflexive = false);

}  // namespace glil::dot

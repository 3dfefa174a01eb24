#include "glil/dot.hpp"

#include <sstream>

namespace glil::dot {
namespace {

void nodes(std::ostringstream& out, const std::vector<std::set<unsigned>>& val,
           std::optional<World> root) {
  for (World w = 0; w < val.size(); ++w) {
    out << "  w" << w << " [label=\"" << w;
    if (!val[w].empty()) {
      out << ":";
      for (unsigned v : val[w]) out << " p" << v;
    }
    out << "\"";
    if (root && *root == w) out << ", shape=doublecircle";
    out << "];\n";
  }
}

}  // namespace

std::string to_dot(const KripkeModel& m) {
  std::ostringstream out;
  out << "digraph kripke {\n  node [shape=circle];\n";
  nodes(out, m.val, m.root);
  for (auto [x, y] : m.r.pairs()) out << "  w" << x << " -> w" << y << ";\n";
  out << "}\n";
  return out.str();
}

std::string to_dot(const VeltmanModel& m, bool show_reflexive) {
  std::ostringstream out;
  out << "digraph veltman {\n  node [shape=circle];\n";
  nodes(out, m.val, std::nullopt);
  for (auto [x, y] : m.r.pairs()) out << "  w" << x << " -> w" << y << ";\n";
  for (World x = 0; x < m.size(); ++x)
    for (auto [y, z] : m.s[x].pairs()) {
      if (y == z && !show_reflexive) continue;
      out << "  w" << y << " -> w" << z << " [style=dashed, label=\"S" << x << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace glil::dot

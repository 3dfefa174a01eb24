#include "glil/relation.hpp"

#include <algorithm>

namespace glil {

bool Relation::empty() const { return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; }); }

std::size_t Relation::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::vector<std::pair<World, World>> Relation::pairs() const {
  std::vector<std::pair<World, World>> out;
  for (World x = 0; x < n_; ++x)
    for (World y = 0; y < n_; ++y)
      if (contains(x, y)) out.emplace_back(x, y);
  return out;
}

std::vector<World> Relation::successors(World x) const {
  std::vector<World> out;
  for (World y = 0; y < n_; ++y)
    if (contains(x, y)) out.push_back(y);
  return out;
}

void Relation::close_transitively() {
  for (World k = 0; k < n_; ++k)
    for (World i = 0; i < n_; ++i) {
      if (!contains(i, k)) continue;
      for (World j = 0; j < n_; ++j)
        if (contains(k, j)) insert(i, j);
    }
}

void Relation::add_identity_on(const std::vector<World>& carrier) {
  for (World y : carrier) insert(y, y);
}

bool Relation::is_transitive() const {
  for (World x = 0; x < n_; ++x)
    for (World y = 0; y < n_; ++y) {
      if (!contains(x, y)) continue;
      for (World z = 0; z < n_; ++z)
        if (contains(y, z) && !contains(x, z)) return false;
    }
  return true;
}

bool Relation::is_irreflexive() const {
  for (World x = 0; x < n_; ++x)
    if (contains(x, x)) return false;
  return true;
}

}  // namespace glil

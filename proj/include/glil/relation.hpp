#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace glil {

using World = std::size_t;

/// Set of worlds of a model with `n` worlds, as a membership vector.
using WorldSet = std::vector<bool>;

/// Binary relation on {0, ..., n-1}, stored as a dense adjacency matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, false) {}

  std::size_t size() const noexcept { return n_; }

  bool contains(World x, World y) const { return bits_[x * n_ + y]; }
  void insert(World x, World y) { bits_[x * n_ + y] = true; }
  void erase(World x, World y) { bits_[x * n_ + y] = false; }

  bool empty() const;
  std::size_t count() const;

  /// All pairs, lexicographically ordered.
  std::vector<std::pair<World, World>> pairs() const;
  /// {y : x R y}, ascending.
  std::vector<World> successors(World x) const;

  /// Warshall closure.
  void close_transitively();
  /// Adds (y, y) for every y in `carrier`.
  void add_identity_on(const std::vector<World>& carrier);

  bool is_transitive() const;
  bool is_irreflexive() const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<bool> bits_;
};

}  // namespace glil

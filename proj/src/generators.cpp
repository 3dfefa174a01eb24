#include "glil/generators.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <string>

namespace glil::gen {

using F = Formula;

std::vector<Formula> enumerate_core_formulas(unsigned max_size) {
  std::vector<std::vector<Formula>> by_size(max_size + 1);
  if (max_size >= 1) by_size[1] = {F::Bot(), F::Var(0)};
  for (unsigned s = 2; s <= max_size; ++s) {
    for (const auto& a : by_size[s - 1]) by_size[s].push_back(F::Box(a));
    for (unsigned left = 1; left + 1 < s; ++left)
      for (const auto& a : by_size[left])
        for (const auto& b : by_size[s - 1 - left]) by_size[s].push_back(F::Imp(a, b));
  }
  std::vector<Formula> out;
  for (auto& group : by_size) out.insert(out.end(), group.begin(), group.end());
  return out;
}

namespace {

std::size_t pick(Rng& rng, std::size_t n) { return static_cast<std::size_t>(rng() % n); }

Formula leaf(Rng& rng, const FormulaShape& shape) {
  const std::size_t constants = shape.full_connectives ? 2 : 1;
  const std::size_t k = pick(rng, constants + shape.variables);
  if (k == 0) return F::Bot();
  if (k < constants) return F::Top();
  return F::Var(static_cast<unsigned>(k - constants));
}

Formula build(Rng& rng, const FormulaShape& shape, unsigned size) {
  if (size <= 1) return leaf(rng, shape);
  if (size == 2) {
    const std::size_t k = pick(rng, shape.full_connectives ? 3 : 1);
    Formula a = leaf(rng, shape);
    return k == 0 ? F::Box(a) : k == 1 ? F::Dia(a) : F::Not(a);
  }
  std::vector<int> unary{0};
  std::vector<int> binary{0};
  if (shape.full_connectives) {
    unary = {0, 1, 2};
    binary = {0, 1, 2, 3};
  }
  if (shape.allow_rhd) binary.push_back(4);
  // Prefer binary nodes roughly two thirds of the time.
  if (pick(rng, 3) == 0) {
    Formula a = build(rng, shape, size - 1);
    switch (unary[pick(rng, unary.size())]) {
      case 0: return F::Box(a);
      case 1: return F::Dia(a);
      default: return F::Not(a);
    }
  }
  const unsigned left = 1 + static_cast<unsigned>(pick(rng, size - 2));
  Formula a = build(rng, shape, left);
  Formula b = build(rng, shape, size - 1 - left);
  switch (binary[pick(rng, binary.size())]) {
    case 0: return F::Imp(a, b);
    case 1: return F::And(a, b);
    case 2: return F::Or(a, b);
    case 3: return F::Iff(a, b);
    default: return F::Rhd(a, b);
  }
}

// Canonical string of the subtree at v (sorted children encodings).
std::string canonical(const std::vector<std::vector<int>>& children, int v) {
  std::vector<std::string> parts;
  for (int c : children[v]) parts.push_back(canonical(children, c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (const auto& p : parts) out += p;
  return out + ")";
}

}  // namespace

Formula random_formula(Rng& rng, const FormulaShape& shape) {
  const unsigned span = shape.max_size - shape.min_size + 1;
  const unsigned size = shape.min_size + static_cast<unsigned>(pick(rng, span));
  return build(rng, shape, size);
}

std::vector<std::vector<int>> enumerate_tree_shapes(unsigned n) {
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  std::set<std::string> seen;
  std::vector<int> parent(n, -1);
  std::function<void(unsigned)> extend = [&](unsigned i) {
    if (i == n) {
      std::vector<std::vector<int>> children(n);
      for (unsigned v = 1; v < n; ++v) children[parent[v]].push_back(static_cast<int>(v));
      if (seen.insert(canonical(children, 0)).second) out.push_back(parent);
      return;
    }
    for (unsigned p = 0; p < i; ++p) {
      parent[i] = static_cast<int>(p);
      extend(i + 1);
    }
  };
  extend(1);
  return out;
}

KripkeModel tree_model(const std::vector<int>& parent, const std::vector<bool>& p0) {
  std::vector<std::pair<World, World>> edges;
  for (std::size_t v = 1; v < parent.size(); ++v) edges.emplace_back(parent[v], v);
  KripkeModel m(parent.size());
  m.r = tree_closure(parent.size(), edges);
  for (std::size_t v = 0; v < parent.size(); ++v)
    if (p0[v]) m.val[v].insert(0);
  m.root = 0;
  return m;
}

std::vector<KripkeModel> enumerate_tree_models(unsigned max_worlds, std::size_t cap_per_shape) {
  std::vector<KripkeModel> out;
  for (unsigned n = 1; n <= max_worlds; ++n) {
    for (const auto& shape : enumerate_tree_shapes(n)) {
      const std::size_t total = std::size_t{1} << n;
      for (std::size_t mask = 0; mask < total && mask < cap_per_shape; ++mask) {
        std::vector<bool> p0(n);
        for (unsigned v = 0; v < n; ++v) p0[v] = (mask >> v) & 1;
        out.push_back(tree_model(shape, p0));
      }
    }
  }
  return out;
}

KripkeModel random_tree_model(Rng& rng, unsigned max_worlds) {
  const unsigned n = 1 + static_cast<unsigned>(pick(rng, max_worlds));
  std::vector<int> parent(n, -1);
  for (unsigned v = 1; v < n; ++v) parent[v] = static_cast<int>(pick(rng, v));
  std::vector<bool> p0(n);
  for (unsigned v = 0; v < n; ++v) p0[v] = rng() & 1;
  return tree_model(parent, p0);
}

}  // namespace glil::gen

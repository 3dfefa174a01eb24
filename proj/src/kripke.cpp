#include "glil/kripke.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "glil/error.hpp"

namespace glil {

std::string Violation::message() const {
  std::ostringstream out;
  out << condition << " at ";
  if (witness.size() == 1) {
    out << witness.front();
  } else {
    out << '(';
    for (std::size_t i = 0; i < witness.size(); ++i) out << (i ? "," : "") << witness[i];
    out << ')';
  }
  return out.str();
}

bool Diagnostics::has(const std::string& message) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& v) { return v.message() == message; });
}

Diagnostics validate_gl_frame(const KripkeModel& m) {
  Diagnostics d;
  const std::size_t n = m.size();
  if (m.r.size() != n) {
    d.add("relation size mismatch", {m.r.size(), n});
    return d;
  }
  for (World x = 0; x < n; ++x)
    if (m.r.contains(x, x)) d.add("irreflexivity", {x});
  for (World x = 0; x < n; ++x)
    for (World y = 0; y < n; ++y) {
      if (!m.r.contains(x, y)) continue;
      for (World z = 0; z < n; ++z)
        if (m.r.contains(y, z) && !m.r.contains(x, z)) d.add("transitivity", {x, y, z});
    }
  if (m.root && *m.root >= n) d.add("root out of range", {*m.root});
  return d;
}

std::vector<unsigned> heights(const Relation& r) {
  const std::size_t n = r.size();
  std::vector<unsigned> h(n, 0);
  std::vector<char> state(n, 0);  // 0 new, 1 in progress, 2 done
  std::function<unsigned(World)> visit = [&](World x) -> unsigned {
    if (state[x] == 2) return h[x];
    if (state[x] == 1) throw PreconditionError("heights: relation has a cycle");
    state[x] = 1;
    unsigned best = 0;
    for (World y = 0; y < n; ++y)
      if (r.contains(x, y)) best = std::max(best, visit(y) + 1);
    h[x] = best;
    state[x] = 2;
    return best;
  };
  for (World x = 0; x < n; ++x) visit(x);
  return h;
}

std::vector<World> endpoints(const Relation& r) {
  std::vector<World> out;
  for (World x = 0; x < r.size(); ++x)
    if (r.successors(x).empty()) out.push_back(x);
  return out;
}

std::optional<World> tree_root(const KripkeModel& m) {
  const std::size_t n = m.size();
  if (n == 0 || m.r.size() != n || !m.r.is_irreflexive() || !m.r.is_transitive()) {
    return std::nullopt;
  }
  // In a transitive acyclic relation the immediate predecessors of y are the
  // maximal elements of its predecessor set; tree-likeness means each
  // non-root world has exactly one, i.e. its predecessors form a chain.
  std::optional<World> root;
  for (World y = 0; y < n; ++y) {
    std::vector<World> preds;
    for (World x = 0; x < n; ++x)
      if (m.r.contains(x, y)) preds.push_back(x);
    if (preds.empty()) {
      if (root) return std::nullopt;
      root = y;
      continue;
    }
    for (std::size_t i = 0; i < preds.size(); ++i)
      for (std::size_t j = i + 1; j < preds.size(); ++j)
        if (!m.r.contains(preds[i], preds[j]) && !m.r.contains(preds[j], preds[i])) {
          return std::nullopt;
        }
  }
  if (!root) return std::nullopt;
  for (World y = 0; y < n; ++y)
    if (y != *root && !m.r.contains(*root, y)) return std::nullopt;
  if (m.root && *m.root != *root) return std::nullopt;
  return root;
}

Relation tree_closure(std::size_t n, const std::vector<std::pair<World, World>>& edges) {
  Relation r(n);
  for (auto [x, y] : edges) r.insert(x, y);
  r.close_transitively();
  return r;
}

WorldSet truth_set_gl(const KripkeModel& m, const Formula& f) {
  const std::size_t n = m.size();
  WorldSet out(n, false);
  switch (f.op()) {
    case Op::Bot:
      break;
    case Op::Top:
      out.assign(n, true);
      break;
    case Op::Var:
      for (World w = 0; w < n; ++w) out[w] = m.forces(w, f.var());
      break;
    case Op::Not: {
      const WorldSet a = truth_set_gl(m, f.lhs());
      for (World w = 0; w < n; ++w) out[w] = !a[w];
      break;
    }
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff: {
      const WorldSet a = truth_set_gl(m, f.lhs());
      const WorldSet b = truth_set_gl(m, f.rhs());
      for (World w = 0; w < n; ++w) {
        switch (f.op()) {
          case Op::And: out[w] = a[w] && b[w]; break;
          case Op::Or: out[w] = a[w] || b[w]; break;
          case Op::Imp: out[w] = !a[w] || b[w]; break;
          default: out[w] = a[w] == b[w]; break;
        }
      }
      break;
    }
    case Op::Box:
    case Op::Dia: {
      const WorldSet a = truth_set_gl(m, f.lhs());
      const bool box = f.op() == Op::Box;
      for (World x = 0; x < n; ++x) {
        bool v = box;
        for (World y = 0; y < n; ++y) {
          if (!m.r.contains(x, y)) continue;
          if (box && !a[y]) { v = false; break; }
          if (!box && a[y]) { v = true; break; }
        }
        out[x] = v;
      }
      break;
    }
    case Op::Rhd:
      throw PreconditionError("GL model checking: formula contains |>");
  }
  return out;
}

bool mc_gl(const KripkeModel& m, World x, const Formula& f) {
  if (x >= m.size()) throw PreconditionError("mc_gl: world " + std::to_string(x) + " not in model");
  return truth_set_gl(m, f)[x];
}

}  // namespace glil

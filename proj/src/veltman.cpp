#include "glil/veltman.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "glil/error.hpp"

namespace glil {

Diagnostics validate_veltman(const VeltmanModel& m) {
  Diagnostics d;
  const std::size_t n = m.size();
  if (m.r.size() != n || m.s.size() != n) {
    d.add("shape mismatch", {m.r.size(), m.s.size(), n});
    return d;
  }
  for (World x = 0; x < n; ++x)
    if (m.s[x].size() != n) {
      d.add("shape mismatch", {x});
      return d;
    }

  for (World x = 0; x < n; ++x)
    if (m.r.contains(x, x)) d.add("R-irreflexivity", {x});
  for (World x = 0; x < n; ++x)
    for (World y = 0; y < n; ++y) {
      if (!m.r.contains(x, y)) continue;
      for (World z = 0; z < n; ++z)
        if (m.r.contains(y, z) && !m.r.contains(x, z)) d.add("R-transitivity", {x, y, z});
    }

  for (World x = 0; x < n; ++x) {
    const Relation& sx = m.s[x];
    for (World y = 0; y < n; ++y)
      for (World z = 0; z < n; ++z)
        if (sx.contains(y, z) && (!m.r.contains(x, y) || !m.r.contains(x, z))) {
          d.add("condition 1", {x, y, z});
        }
    for (World y = 0; y < n; ++y)
      if (m.r.contains(x, y) && !sx.contains(y, y)) d.add("S-reflexivity", {x, y});
    for (World y = 0; y < n; ++y)
      for (World z = 0; z < n; ++z) {
        if (!sx.contains(y, z)) continue;
        for (World w = 0; w < n; ++w)
          if (sx.contains(z, w) && !sx.contains(y, w)) d.add("S-transitivity", {x, y, z, w});
      }
    for (World y = 0; y < n; ++y) {
      if (!m.r.contains(x, y)) continue;
      for (World z = 0; z < n; ++z)
        if (m.r.contains(y, z) && !sx.contains(y, z)) d.add("condition 2", {x, y, z});
    }
  }
  return d;
}

const WorldSet& IlEvaluator::truth_set(const Formula& f) {
  if (auto it = cache_.find(f.identity()); it != cache_.end()) return it->second.second;
  WorldSet value = compute(f);
  return cache_.emplace(f.identity(), std::make_pair(f, std::move(value))).first->second.second;
}

bool IlEvaluator::holds(World x, const Formula& f) {
  if (x >= m_.size()) throw PreconditionError("mc_il: world " + std::to_string(x) + " not in model");
  return truth_set(f)[x];
}

WorldSet IlEvaluator::compute(const Formula& f) {
  const std::size_t n = m_.size();
  WorldSet out(n, false);
  switch (f.op()) {
    case Op::Bot:
      break;
    case Op::Top:
      out.assign(n, true);
      break;
    case Op::Var:
      for (World w = 0; w < n; ++w) out[w] = m_.forces(w, f.var());
      break;
    case Op::Not: {
      const WorldSet& a = truth_set(f.lhs());
      for (World w = 0; w < n; ++w) out[w] = !a[w];
      break;
    }
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff: {
      const WorldSet a = truth_set(f.lhs());
      const WorldSet& b = truth_set(f.rhs());
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
    case Op::Box: {
      const WorldSet& a = truth_set(f.lhs());
      for (World x = 0; x < n; ++x) {
        bool all = true;
        for (World y = 0; y < n && all; ++y)
          if (m_.r.contains(x, y) && !a[y]) all = false;
        out[x] = all;
      }
      break;
    }
    case Op::Dia: {
      // ~[]~A
      const WorldSet& a = truth_set(f.lhs());
      for (World x = 0; x < n; ++x) {
        bool all_fail = true;
        for (World y = 0; y < n && all_fail; ++y)
          if (m_.r.contains(x, y) && a[y]) all_fail = false;
        out[x] = !all_fail;
      }
      break;
    }
    case Op::Rhd: {
      const WorldSet a = truth_set(f.lhs());
      const WorldSet& b = truth_set(f.rhs());
      for (World x = 0; x < n; ++x) {
        const Relation& sx = m_.s[x];
        bool ok = true;
        for (World y = 0; y < n && ok; ++y) {
          if (!m_.r.contains(x, y) || !a[y]) continue;
          bool reached = false;
          for (World z = 0; z < n && !reached; ++z) reached = sx.contains(y, z) && b[z];
          ok = reached;
        }
        out[x] = ok;
      }
      break;
    }
  }
  return out;
}

bool mc_il(const VeltmanModel& m, World x, const Formula& f) { return IlEvaluator(m).holds(x, f); }

KripkeModel reduct(const VeltmanModel& m) {
  KripkeModel k(m.size());
  k.r = m.r;
  k.val = m.val;
  return k;
}

namespace {

// Portable uniform double in [0, 1) from the raw 64-bit engine output.
double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

}  // namespace

VeltmanModel random_veltman(std::size_t n_worlds, double edge_density, std::uint64_t seed,
                            unsigned variables, double s_density) {
  if (n_worlds == 0) throw PreconditionError("random_veltman: need at least one world");
  std::mt19937_64 rng(seed);
  VeltmanModel m(n_worlds);

  std::vector<World> order(n_worlds);
  std::iota(order.begin(), order.end(), World{0});
  for (std::size_t i = n_worlds; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);

  for (std::size_t i = 0; i < n_worlds; ++i)
    for (std::size_t j = i + 1; j < n_worlds; ++j)
      if (unit(rng) < edge_density) m.r.insert(order[i], order[j]);
  m.r.close_transitively();

  for (World x = 0; x < n_worlds; ++x) {
    const std::vector<World> succ = m.r.successors(x);
    Relation& sx = m.s[x];
    sx.add_identity_on(succ);
    for (World y : succ)
      for (World z : succ)
        if (m.r.contains(y, z)) sx.insert(y, z);
    for (World y : succ)
      for (World z : succ)
        if (y != z && !sx.contains(y, z) && unit(rng) < s_density) sx.insert(y, z);
    sx.close_transitively();
  }

  for (World w = 0; w < n_worlds; ++w)
    for (unsigned v = 0; v < variables; ++v)
      if (rng() & 1) m.val[w].insert(v);
  return m;
}

}  // namespace glil

#pragma once

// Test-only oracles. They evaluate one world at a time straight from the
// forcing clauses and share no code with the library evaluators.

#include <vector>

#include "glil/formula.hpp"
#include "glil/kripke.hpp"
#include "glil/veltman.hpp"

namespace glil::testing {

inline bool naive_il(const VeltmanModel& m, World x, const Formula& f) {
  const std::size_t n = m.size();
  switch (f.op()) {
    case Op::Bot: return false;
    case Op::Top: return true;
    case Op::Var: return m.val[x].count(f.var()) != 0;
    case Op::Not: return !naive_il(m, x, f.lhs());
    case Op::And: return naive_il(m, x, f.lhs()) && naive_il(m, x, f.rhs());
    case Op::Or: return naive_il(m, x, f.lhs()) || naive_il(m, x, f.rhs());
    case Op::Imp: return !naive_il(m, x, f.lhs()) || naive_il(m, x, f.rhs());
    case Op::Iff: return naive_il(m, x, f.lhs()) == naive_il(m, x, f.rhs());
    case Op::Box:
      for (World y = 0; y < n; ++y)
        if (m.r.contains(x, y) && !naive_il(m, y, f.lhs())) return false;
      return true;
    case Op::Dia:
      return !naive_il(m, x, Formula::Box(Formula::Not(f.lhs())));
    case Op::Rhd:
      for (World y = 0; y < n; ++y) {
        if (!m.r.contains(x, y) || !naive_il(m, y, f.lhs())) continue;
        bool found = false;
        for (World z = 0; z < n && !found; ++z)
          found = m.s[x].contains(y, z) && naive_il(m, z, f.rhs());
        if (!found) return false;
      }
      return true;
  }
  return false;
}

inline bool naive_gl(const KripkeModel& k, World x, const Formula& f) {
  VeltmanModel m(k.size());
  m.r = k.r;
  m.val = k.val;
  return naive_il(m, x, f);
}

/// Strict chain 0 R 1 R ... R (n-1), transitively closed; world 0 has height n-1.
inline KripkeModel chain(std::size_t n) {
  KripkeModel m(n);
  for (World i = 0; i < n; ++i)
    for (World j = i + 1; j < n; ++j) m.r.insert(i, j);
  m.root = 0;
  return m;
}

/// Closed |>-free formula pool of small depth.
inline std::vector<Formula> small_closed_pool() {
  using F = Formula;
  const F t = F::Top(), b = F::Bot();
  return {b, t, F::Dia(t), F::Box(b), F::Dia(F::Dia(t)), F::Box(F::Box(b)), F::Dia(F::Box(b)),
          F::Not(F::Dia(t)), F::And(F::Dia(t), F::Box(F::Box(b)))};
}

}  // namespace glil::testing

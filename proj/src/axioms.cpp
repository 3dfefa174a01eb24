#include "glil/axioms.hpp"

#include "glil/syntax.hpp"

namespace glil {

using F = Formula;

Formula instantiate(Scheme scheme, const Formula& a, const Formula& b, const Formula& c) {
  switch (scheme) {
    case Scheme::J1:
      return F::Imp(F::Box(F::Imp(a, b)), F::Rhd(a, b));
    case Scheme::J2:
      return F::Imp(F::And(F::Rhd(a, b), F::Rhd(b, c)), F::Rhd(a, c));
    case Scheme::J3:
      return F::Imp(F::And(F::Rhd(a, c), F::Rhd(b, c)), F::Rhd(F::Or(a, b), c));
    case Scheme::J4:
      return F::Imp(F::Rhd(a, b), F::Imp(F::Dia(a), F::Dia(b)));
    case Scheme::J5:
      return F::Rhd(F::Dia(a), a);
    case Scheme::F:
      return F::Imp(F::Dia(a), F::Not(F::Rhd(a, F::Dia(a))));
    case Scheme::GL1:
      return F::Imp(F::Box(F::Imp(a, b)), F::Imp(F::Box(a), F::Box(b)));
    case Scheme::GL2:
      return F::Imp(F::Box(F::Imp(F::Box(a), a)), F::Box(a));
    case Scheme::BoxRhd:
      return F::Iff(F::Box(a), F::Rhd(F::Not(a), F::Bot()));
  }
  return F::Top();
}

const std::array<Scheme, 9>& all_schemes() {
  static constexpr std::array<Scheme, 9> schemes{Scheme::J1, Scheme::J2,  Scheme::J3,
                                                 Scheme::J4, Scheme::J5,  Scheme::F,
                                                 Scheme::GL1, Scheme::GL2, Scheme::BoxRhd};
  return schemes;
}

std::string_view scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::J1: return "J1";
    case Scheme::J2: return "J2";
    case Scheme::J3: return "J3";
    case Scheme::J4: return "J4";
    case Scheme::J5: return "J5";
    case Scheme::F: return "F";
    case Scheme::GL1: return "GL1";
    case Scheme::GL2: return "GL2";
    case Scheme::BoxRhd: return "BoxRhd";
  }
  return "?";
}

std::optional<Scheme> scheme_from_name(std::string_view name) {
  for (Scheme s : all_schemes())
    if (scheme_name(s) == name) return s;
  return std::nullopt;
}

bool is_il_valid_scheme(Scheme scheme) { return scheme != Scheme::F; }

Diagnostics check_axiom_sweep(const VeltmanModel& m, Scheme scheme,
                              const std::vector<AxiomInstance>& instances) {
  Diagnostics d;
  IlEvaluator eval(m);
  for (const auto& inst : instances) {
    const Formula f = instantiate(scheme, inst.a, inst.b, inst.c);
    const WorldSet& truth = eval.truth_set(f);
    for (World w = 0; w < m.size(); ++w)
      if (!truth[w]) d.add(std::string(scheme_name(scheme)), {w}, render(f));
  }
  return d;
}

}  // namespace glil

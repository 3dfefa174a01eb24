#include "glil/translate.hpp"

#include "glil/error.hpp"

namespace glil {

using F = Formula;

Formula to_core(const Formula& f) {
  switch (f.op()) {
    case Op::Bot:
    case Op::Var:
      return f;
    case Op::Top:
      return F::Imp(F::Bot(), F::Bot());
    case Op::Not:
      return F::Imp(to_core(f.lhs()), F::Bot());
    case Op::Box:
      return F::Box(to_core(f.lhs()));
    case Op::Dia:
      return F::Imp(F::Box(F::Imp(to_core(f.lhs()), F::Bot())), F::Bot());
    case Op::Imp:
      return F::Imp(to_core(f.lhs()), to_core(f.rhs()));
    case Op::Or:
      return F::Imp(F::Imp(to_core(f.lhs()), F::Bot()), to_core(f.rhs()));
    case Op::And:
      return F::Imp(F::Imp(to_core(f.lhs()), F::Imp(to_core(f.rhs()), F::Bot())), F::Bot());
    case Op::Iff: {
      const F a = to_core(f.lhs());
      const F b = to_core(f.rhs());
      return F::Imp(F::Imp(F::Imp(a, b), F::Imp(F::Imp(b, a), F::Bot())), F::Bot());
    }
    case Op::Rhd:
      return F::Rhd(to_core(f.lhs()), to_core(f.rhs()));
  }
  return f;
}

namespace {

const F& dia_dia_top() {
  static const F f = F::Dia(F::Dia(F::Top()));
  return f;
}

F dagger_core(const F& f) {
  switch (f.op()) {
    case Op::Bot:
      return f;
    case Op::Var:
      return coded_variable();
    case Op::Imp:
      return F::Imp(dagger_core(f.lhs()), dagger_core(f.rhs()));
    case Op::Box:
      return F::Box(F::Imp(dia_dia_top(), dagger_core(f.lhs())));
    default:
      throw PreconditionError("translate_dagger: formula is not in the core language");
  }
}

}  // namespace

Formula coded_variable() {
  static const F f = F::Imp(dia_dia_top(), F::Rhd(F::Top(), F::Dia(F::Top())));
  return f;
}

Formula translate_dagger(const Formula& a) {
  if (contains_rhd(a)) throw PreconditionError("translate_dagger: input contains |>");
  for (unsigned v : variables(a)) {
    if (v != 0) {
      throw PreconditionError("translate_dagger: only p0 may occur, found p" + std::to_string(v));
    }
  }
  return dagger_core(to_core(a));
}

Formula box_as_rhd(const Formula& f) {
  switch (f.op()) {
    case Op::Bot:
    case Op::Top:
    case Op::Var:
      return f;
    case Op::Not:
      return F::Not(box_as_rhd(f.lhs()));
    case Op::Box:
      return F::Rhd(F::Not(box_as_rhd(f.lhs())), F::Bot());
    case Op::Dia:
      return F::Not(F::Rhd(box_as_rhd(f.lhs()), F::Bot()));
    case Op::And:
      return F::And(box_as_rhd(f.lhs()), box_as_rhd(f.rhs()));
    case Op::Or:
      return F::Or(box_as_rhd(f.lhs()), box_as_rhd(f.rhs()));
    case Op::Imp:
      return F::Imp(box_as_rhd(f.lhs()), box_as_rhd(f.rhs()));
    case Op::Iff:
      return F::Iff(box_as_rhd(f.lhs()), box_as_rhd(f.rhs()));
    case Op::Rhd:
      return F::Rhd(box_as_rhd(f.lhs()), box_as_rhd(f.rhs()));
  }
  return f;
}

}  // namespace glil

#include "glil/closed.hpp"

#include <cassert>
#include <optional>

#include "glil/error.hpp"

namespace glil {
namespace {

void require_closed_gl(const Formula& f, const char* who) {
  if (contains_rhd(f)) throw PreconditionError(std::string(who) + ": formula contains |>");
  if (!is_closed(f)) throw PreconditionError(std::string(who) + ": formula is not closed");
}

std::vector<bool> profile(const Formula& f, unsigned max_height) {
  const std::size_t n = max_height + 1;
  std::vector<bool> out(n, false);
  switch (f.op()) {
    case Op::Bot:
      break;
    case Op::Top:
      out.assign(n, true);
      break;
    case Op::Not: {
      const auto a = profile(f.lhs(), max_height);
      for (std::size_t h = 0; h < n; ++h) out[h] = !a[h];
      break;
    }
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff: {
      const auto a = profile(f.lhs(), max_height);
      const auto b = profile(f.rhs(), max_height);
      for (std::size_t h = 0; h < n; ++h) {
        switch (f.op()) {
          case Op::And: out[h] = a[h] && b[h]; break;
          case Op::Or: out[h] = a[h] || b[h]; break;
          case Op::Imp: out[h] = !a[h] || b[h]; break;
          default: out[h] = a[h] == b[h]; break;
        }
      }
      break;
    }
    case Op::Box: {
      const auto a = profile(f.lhs(), max_height);
      bool all_below = true;
      for (std::size_t h = 0; h < n; ++h) {
        out[h] = all_below;
        all_below = all_below && a[h];
      }
      break;
    }
    case Op::Dia: {
      const auto a = profile(f.lhs(), max_height);
      bool some_below = false;
      for (std::size_t h = 0; h < n; ++h) {
        out[h] = some_below;
        some_below = some_below || a[h];
      }
      break;
    }
    case Op::Var:
    case Op::Rhd:
      assert(false);
      break;
  }
  return out;
}

Formula run_formula(unsigned from, std::optional<unsigned> to) {
  using F = Formula;
  const F lower = F::Not(box_power(F::Bot(), from));
  if (!to) return from == 0 ? F::Top() : lower;
  return F::And(box_power(F::Bot(), *to), lower);
}

}  // namespace

std::vector<bool> closed_truth_profile(const Formula& f, unsigned max_height) {
  require_closed_gl(f, "closed_truth_profile");
  return profile(f, max_height);
}

bool eval_closed_at_height(const Formula& f, unsigned h) {
  require_closed_gl(f, "eval_closed_at_height");
  return profile(f, h)[h];
}

NormalForm normal_form_closed(const Formula& f) {
  require_closed_gl(f, "normal_form_closed");
  NormalForm nf;
  nf.depth = modal_depth(f);
  const auto truth = profile(f, nf.depth);
  nf.below.assign(truth.begin(), truth.begin() + nf.depth);
  nf.stable = truth[nf.depth];

  std::vector<Formula> runs;
  unsigned h = 0;
  while (h < nf.depth) {
    if (!truth[h]) {
      ++h;
      continue;
    }
    unsigned end = h;
    while (end < nf.depth && truth[end]) ++end;
    if (end == nf.depth && nf.stable) break;
    runs.push_back(run_formula(h, end));
    h = end;
  }
  if (nf.stable) runs.push_back(run_formula(h, std::nullopt));

  if (runs.empty()) {
    nf.formula = Formula::Bot();
  } else {
    nf.formula = runs.front();
    for (std::size_t i = 1; i < runs.size(); ++i) nf.formula = Formula::Or(nf.formula, runs[i]);
  }
  return nf;
}

}  // namespace glil

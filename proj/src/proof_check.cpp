#include <algorithm>
#include <set>

#include "glil/prover.hpp"

namespace glil {
namespace {

using Label = std::vector<SignedFormula>;

bool member(const Label& l, const SignedFormula& s) {
  return std::find(l.begin(), l.end(), s) != l.end();
}

bool subset(const Label& a, const Label& b) {
  return std::all_of(a.begin(), a.end(), [&](const SignedFormula& s) { return member(b, s); });
}

Label alpha_consequents(const SignedFormula& s) {
  const Formula& f = s.formula;
  switch (f.op()) {
    case Op::Not:
      return {{!s.truth, f.lhs()}};
    case Op::And:
      if (s.truth) return {{true, f.lhs()}, {true, f.rhs()}};
      break;
    case Op::Or:
      if (!s.truth) return {{false, f.lhs()}, {false, f.rhs()}};
      break;
    case Op::Imp:
      if (!s.truth) return {{true, f.lhs()}, {false, f.rhs()}};
      break;
    default:
      break;
  }
  return {};
}

std::vector<Label> beta_alternatives(const SignedFormula& s) {
  const Formula& f = s.formula;
  switch (f.op()) {
    case Op::And:
      if (!s.truth) return {{{false, f.lhs()}}, {{false, f.rhs()}}};
      break;
    case Op::Or:
      if (s.truth) return {{{true, f.lhs()}}, {{true, f.rhs()}}};
      break;
    case Op::Imp:
      if (s.truth) return {{{false, f.lhs()}}, {{true, f.rhs()}}};
      break;
    case Op::Iff:
      if (s.truth) return {{{true, f.lhs()}, {true, f.rhs()}}, {{false, f.lhs()}, {false, f.rhs()}}};
      return {{{true, f.lhs()}, {false, f.rhs()}}, {{false, f.lhs()}, {true, f.rhs()}}};
    default:
      break;
  }
  return {};
}

Label alpha_closure(Label l) {
  for (std::size_t i = 0; i < l.size(); ++i)
    for (const auto& c : alpha_consequents(l[i]))
      if (!member(l, c)) l.push_back(c);
  return l;
}

bool check_node(const ProofNode& n) {
  if (n.rule == "clash") {
    if (!n.principal || !n.children.empty() || !member(n.label, *n.principal)) return false;
    const SignedFormula& p = *n.principal;
    if (p.formula.op() == Op::Bot && p.truth) return true;
    if (p.formula.op() == Op::Top && !p.truth) return true;
    return member(n.label, {!p.truth, p.formula});
  }
  if (n.rule == "alpha") {
    if (n.children.size() != 1) return false;
    return subset(n.children[0]->label, alpha_closure(n.label));
  }
  if (n.rule == "beta") {
    if (!n.principal || !member(n.label, *n.principal)) return false;
    const auto alts = beta_alternatives(*n.principal);
    if (alts.empty() || alts.size() != n.children.size()) return false;
    for (std::size_t i = 0; i < alts.size(); ++i) {
      Label allowed = n.label;
      allowed.insert(allowed.end(), alts[i].begin(), alts[i].end());
      if (!subset(n.children[i]->label, allowed)) return false;
    }
    return true;
  }
  if (n.rule == "modal") {
    if (!n.principal || !member(n.label, *n.principal) || n.children.size() != 1) return false;
    const SignedFormula& d = *n.principal;
    const Op op = d.formula.op();
    Label allowed;
    if (op == Op::Box && !d.truth) {
      allowed = {{false, d.formula.lhs()}, {true, d.formula}};
    } else if (op == Op::Dia && d.truth) {
      allowed = {{true, d.formula.lhs()}, {false, d.formula}};
    } else {
      return false;
    }
    for (const auto& s : n.label) {
      if (s.formula.op() == Op::Box && s.truth) {
        allowed.push_back({true, s.formula.lhs()});
        allowed.push_back(s);
      } else if (s.formula.op() == Op::Dia && !s.truth) {
        allowed.push_back({false, s.formula.lhs()});
        allowed.push_back(s);
      }
    }
    return subset(n.children[0]->label, allowed);
  }
  return false;
}

}  // namespace

bool check_proof_trace(const ProofTrace& trace, const Formula& goal) {
  if (!trace) return false;
  if (trace->label != Label{{false, goal}}) return false;
  std::set<const ProofNode*> seen;
  std::vector<const ProofNode*> stack{trace.get()};
  while (!stack.empty()) {
    const ProofNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    if (!check_node(*n)) return false;
    for (const auto& c : n->children) stack.push_back(c.get());
  }
  return true;
}

}  // namespace glil

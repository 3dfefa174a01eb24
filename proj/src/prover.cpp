#include "glil/prover.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "glil/error.hpp"
#include "glil/syntax.hpp"

namespace glil {

std::string render(const SignedFormula& s) { return (s.truth ? "T " : "F ") + render(s.formula); }

namespace {

// Signed literal code: 2 * subformula id + (1 if signed T).
using Lit = int;
using Label = std::vector<Lit>;  // sorted, unique

constexpr Lit lit(int id, bool truth) { return 2 * id + (truth ? 1 : 0); }
constexpr int id_of(Lit l) { return l / 2; }
constexpr bool sign_of(Lit l) { return (l & 1) != 0; }

struct TreeNode {
  std::set<unsigned> vars;
  std::vector<std::shared_ptr<const TreeNode>> children;
};

struct Result {
  std::shared_ptr<const TreeNode> model;  // set iff open
  ProofTrace trace;                       // set iff closed
  bool open() const { return model != nullptr; }
};

class Tableau {
 public:
  explicit Tableau(const Formula& goal) { root_ = intern(goal); }

  GlVerdict run() {
    Result r = solve({lit(root_, false)});
    GlVerdict v;
    if (r.open()) {
      v.valid = false;
      v.countermodel = materialize(*r.model);
    } else {
      v.valid = true;
      v.proof_trace = r.trace;
    }
    return v;
  }

 private:
  struct Entry {
    Formula f;
    Op op;
    int a = -1;
    int b = -1;
  };

  int intern(const Formula& f) {
    if (auto it = ids_.find(f); it != ids_.end()) return it->second;
    if (f.op() == Op::Rhd) throw PreconditionError("prove_gl: formula contains |>");
    const int id = static_cast<int>(table_.size());
    ids_.emplace(f, id);
    table_.push_back({f, f.op()});
    if (is_unary(f.op()) || is_binary(f.op())) {
      const int a = intern(f.lhs());
      table_[id].a = a;
      if (is_binary(f.op())) {
        const int b = intern(f.rhs());
        table_[id].b = b;
      }
    }
    return id;
  }

  static bool has(const Label& l, Lit x) { return std::binary_search(l.begin(), l.end(), x); }

  static Label with(Label l, std::initializer_list<Lit> extra) {
    l.insert(l.end(), extra.begin(), extra.end());
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
    return l;
  }

  // Consequents of the non-branching rule for x, if any.
  std::vector<Lit> alpha(Lit x) const {
    const Entry& e = table_[id_of(x)];
    const bool t = sign_of(x);
    switch (e.op) {
      case Op::Not:
        return {lit(e.a, !t)};
      case Op::And:
        if (t) return {lit(e.a, true), lit(e.b, true)};
        break;
      case Op::Or:
        if (!t) return {lit(e.a, false), lit(e.b, false)};
        break;
      case Op::Imp:
        if (!t) return {lit(e.a, true), lit(e.b, false)};
        break;
      default:
        break;
    }
    return {};
  }

  // Alternatives of the branching rule for x, if any.
  std::vector<std::vector<Lit>> beta(Lit x) const {
    const Entry& e = table_[id_of(x)];
    const bool t = sign_of(x);
    switch (e.op) {
      case Op::And:
        if (!t) return {{lit(e.a, false)}, {lit(e.b, false)}};
        break;
      case Op::Or:
        if (t) return {{lit(e.a, true)}, {lit(e.b, true)}};
        break;
      case Op::Imp:
        if (t) return {{lit(e.a, false)}, {lit(e.b, true)}};
        break;
      case Op::Iff:
        if (t) return {{lit(e.a, true), lit(e.b, true)}, {lit(e.a, false), lit(e.b, false)}};
        return {{lit(e.a, true), lit(e.b, false)}, {lit(e.a, false), lit(e.b, true)}};
      default:
        break;
    }
    return {};
  }

  Label saturate(Label l) const {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Lit> added;
      for (Lit x : l)
        for (Lit y : alpha(x))
          if (!has(l, y)) added.push_back(y);
      if (!added.empty()) {
        l.insert(l.end(), added.begin(), added.end());
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        changed = true;
      }
    }
    return l;
  }

  std::vector<SignedFormula> signed_label(const Label& l) const {
    std::vector<SignedFormula> out;
    out.reserve(l.size());
    for (Lit x : l) out.push_back({sign_of(x), table_[id_of(x)].f});
    return out;
  }

  SignedFormula signed_of(Lit x) const { return {sign_of(x), table_[id_of(x)].f}; }

  ProofTrace node(const Label& l, std::string rule, std::optional<Lit> principal,
                  std::vector<ProofTrace> children) const {
    auto n = std::make_shared<ProofNode>();
    n->label = signed_label(l);
    n->rule = std::move(rule);
    if (principal) n->principal = signed_of(*principal);
    n->children = std::move(children);
    return n;
  }

  Result solve(const Label& label) {
    Label sat = saturate(label);
    Result r = solve_saturated(sat);
    if (!r.open() && sat != label) r.trace = node(label, "alpha", std::nullopt, {r.trace});
    return r;
  }

  Result solve_saturated(const Label& l) {
    if (auto it = memo_.find(l); it != memo_.end()) return it->second;
    Result r = expand(l);
    memo_.emplace(l, r);
    return r;
  }

  Result expand(const Label& l) {
    for (Lit x : l) {
      const Op op = table_[id_of(x)].op;
      if ((op == Op::Bot && sign_of(x)) || (op == Op::Top && !sign_of(x)) ||
          (sign_of(x) && has(l, x - 1))) {
        return {nullptr, node(l, "clash", x, {})};
      }
    }

    for (Lit x : l) {
      auto alts = beta(x);
      if (alts.empty()) continue;
      const bool done = std::any_of(alts.begin(), alts.end(), [&](const std::vector<Lit>& alt) {
        return std::all_of(alt.begin(), alt.end(), [&](Lit y) { return has(l, y); });
      });
      if (done) continue;
      std::vector<ProofTrace> closed;
      for (const auto& alt : alts) {
        Label next = l;
        next.insert(next.end(), alt.begin(), alt.end());
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        Result sub = solve(next);
        if (sub.open()) return sub;
        closed.push_back(sub.trace);
      }
      return {nullptr, node(l, "beta", x, std::move(closed))};
    }

    // Saturated and clash-free: realize every demand.
    Label context;
    std::vector<Lit> demands;
    auto world = std::make_shared<TreeNode>();
    for (Lit x : l) {
      const Entry& e = table_[id_of(x)];
      const bool t = sign_of(x);
      if (e.op == Op::Var && t) world->vars.insert(e.f.var());
      if (e.op == Op::Box) {
        if (t) {
          context.push_back(lit(e.a, true));
          context.push_back(x);
        } else {
          demands.push_back(x);
        }
      } else if (e.op == Op::Dia) {
        if (t) {
          demands.push_back(x);
        } else {
          context.push_back(lit(e.a, false));
          context.push_back(x);
        }
      }
    }
    std::sort(context.begin(), context.end());
    context.erase(std::unique(context.begin(), context.end()), context.end());
    // Lit order is subformula order, so demands are realized in that order.
    for (Lit d : demands) {
      const Entry& e = table_[id_of(d)];
      const Label child = sign_of(d) ? with(context, {lit(e.a, true), lit(id_of(d), false)})
                                     : with(context, {lit(e.a, false), lit(id_of(d), true)});
      Result sub = solve(child);
      if (!sub.open()) return {nullptr, node(l, "modal", d, {sub.trace})};
      world->children.push_back(sub.model);
    }
    return {world, nullptr};
  }

  static KripkeModel materialize(const TreeNode& top) {
    std::vector<std::set<unsigned>> vals;
    std::vector<std::pair<World, World>> edges;
    auto visit = [&](auto&& self, const TreeNode& n) -> World {
      const World me = vals.size();
      vals.push_back(n.vars);
      for (const auto& c : n.children) {
        const World child = self(self, *c);
        edges.emplace_back(me, child);
      }
      return me;
    };
    visit(visit, top);
    KripkeModel m(vals.size());
    m.val = std::move(vals);
    m.r = tree_closure(m.size(), edges);
    m.root = 0;
    return m;
  }

  std::vector<Entry> table_;
  std::unordered_map<Formula, int> ids_;
  std::map<Label, Result> memo_;
  int root_ = 0;
};

void collect_modal(const Formula& f, std::set<Formula>& out) {
  if (f.op() == Op::Box || f.op() == Op::Dia) out.insert(f);
  if (is_unary(f.op()) || is_binary(f.op())) collect_modal(f.lhs(), out);
  if (is_binary(f.op())) collect_modal(f.rhs(), out);
}

}  // namespace

GlVerdict prove_gl(const Formula& f) {
  if (contains_rhd(f)) throw PreconditionError("prove_gl: formula contains |>");
  return Tableau(f).run();
}

unsigned modal_subformula_count(const Formula& f) {
  std::set<Formula> modal;
  collect_modal(f, modal);
  return static_cast<unsigned>(modal.size());
}

SearchBounds sufficient_bounds(const Formula& f) {
  const unsigned k = modal_subformula_count(f);
  return {k, k};
}

std::size_t proof_trace_size(const ProofTrace& trace) {
  if (!trace) return 0;
  std::set<const ProofNode*> seen;
  std::vector<const ProofNode*> stack{trace.get()};
  while (!stack.empty()) {
    const ProofNode* n = stack.back();
    stack.pop_back();
    if (!seen.insert(n).second) continue;
    for (const auto& c : n->children) stack.push_back(c.get());
  }
  return seen.size();
}

}  // namespace glil

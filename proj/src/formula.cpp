#include "glil/formula.hpp"

#include <algorithm>
#include <cassert>

namespace glil {

struct Formula::Node {
  Op op;
  unsigned var;
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  std::size_t hash;
  std::size_t size;
  unsigned depth;
};

bool is_unary(Op op) noexcept { return op == Op::Not || op == Op::Box || op == Op::Dia; }

bool is_binary(Op op) noexcept {
  switch (op) {
    case Op::And:
    case Op::Or:
    case Op::Imp:
    case Op::Iff:
    case Op::Rhd:
      return true;
    default:
      return false;
  }
}

Formula Formula::make(Op op, unsigned var, const Formula* a, const Formula* b) {
  auto node = std::make_shared<Node>();
  node->op = op;
  node->var = var;
  std::size_t h = static_cast<std::size_t>(op) * 0x9e3779b97f4a7c15ULL + var;
  node->size = 1;
  node->depth = 0;
  if (a) {
    node->a = a->node_;
    h = (h ^ a->hash()) * 0x100000001b3ULL;
    node->size += a->node_->size;
    node->depth = a->node_->depth;
  }
  if (b) {
    node->b = b->node_;
    h = (h ^ (b->hash() + 0x7f4a7c15)) * 0x100000001b3ULL;
    node->size += b->node_->size;
    node->depth = std::max(node->depth, b->node_->depth);
  }
  if (op == Op::Box || op == Op::Dia || op == Op::Rhd) ++node->depth;
  node->hash = h;
  return Formula(std::move(node));
}

Formula Formula::Bot() {
  static const Formula bot = make(Op::Bot, 0, nullptr, nullptr);
  return bot;
}
Formula Formula::Top() {
  static const Formula top = make(Op::Top, 0, nullptr, nullptr);
  return top;
}
Formula Formula::Var(unsigned index) { return make(Op::Var, index, nullptr, nullptr); }
Formula Formula::Not(Formula a) { return make(Op::Not, 0, &a, nullptr); }
Formula Formula::And(Formula a, Formula b) { return make(Op::And, 0, &a, &b); }
Formula Formula::Or(Formula a, Formula b) { return make(Op::Or, 0, &a, &b); }
Formula Formula::Imp(Formula a, Formula b) { return make(Op::Imp, 0, &a, &b); }
Formula Formula::Iff(Formula a, Formula b) { return make(Op::Iff, 0, &a, &b); }
Formula Formula::Box(Formula a) { return make(Op::Box, 0, &a, nullptr); }
Formula Formula::Dia(Formula a) { return make(Op::Dia, 0, &a, nullptr); }
Formula Formula::Rhd(Formula a, Formula b) { return make(Op::Rhd, 0, &a, &b); }

Op Formula::op() const noexcept { return node_->op; }
unsigned Formula::var() const noexcept { return node_->var; }

Formula Formula::lhs() const {
  assert(node_->a);
  return Formula(node_->a);
}

Formula Formula::rhs() const {
  assert(node_->b);
  return Formula(node_->b);
}

std::size_t Formula::hash() const noexcept { return node_->hash; }

namespace {

int compare_nodes(const Formula::Node* x, const Formula::Node* y) noexcept {
  while (true) {
    if (x == y) return 0;
    if (x->op != y->op) return x->op < y->op ? -1 : 1;
    if (x->var != y->var) return x->var < y->var ? -1 : 1;
    if (!x->a) return 0;
    if (x->b) {
      if (int c = compare_nodes(x->a.get(), y->a.get()); c != 0) return c;
      x = x->b.get();
      y = y->b.get();
    } else {
      x = x->a.get();
      y = y->a.get();
    }
  }
}

}  // namespace

int compare(const Formula& a, const Formula& b) noexcept {
  return compare_nodes(a.identity(), b.identity());
}

bool operator==(const Formula& a, const Formula& b) noexcept {
  if (a.node_ == b.node_) return true;
  if (a.node_->hash != b.node_->hash || a.node_->size != b.node_->size) return false;
  return compare(a, b) == 0;
}

bool operator<(const Formula& a, const Formula& b) noexcept { return compare(a, b) < 0; }

std::size_t size(const Formula& f) { return f.identity()->size; }

unsigned modal_depth(const Formula& f) { return f.identity()->depth; }

namespace {

void collect(const Formula& f, FormulaStats& st) {
  ++st.size;
  switch (f.op()) {
    case Op::Bot:
    case Op::Top:
      return;
    case Op::Var:
      st.variables.insert(f.var());
      return;
    case Op::Rhd:
      st.is_box_only = false;
      collect(f.lhs(), st);
      collect(f.rhs(), st);
      return;
    default:
      collect(f.lhs(), st);
      if (is_binary(f.op())) collect(f.rhs(), st);
  }
}

}  // namespace

FormulaStats stats(const Formula& f) {
  FormulaStats st;
  st.size = 0;
  collect(f, st);
  st.modal_depth = modal_depth(f);
  st.is_closed = st.variables.empty();
  return st;
}

std::set<unsigned> variables(const Formula& f) { return stats(f).variables; }

bool is_closed(const Formula& f) { return variables(f).empty(); }

bool contains_rhd(const Formula& f) {
  switch (f.op()) {
    case Op::Bot:
    case Op::Top:
    case Op::Var:
      return false;
    case Op::Rhd:
      return true;
    default:
      return contains_rhd(f.lhs()) || (is_binary(f.op()) && contains_rhd(f.rhs()));
  }
}

Formula box_power(Formula f, unsigned n) {
  for (unsigned i = 0; i < n; ++i) f = Formula::Box(std::move(f));
  return f;
}

}  // namespace glil

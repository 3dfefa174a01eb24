#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>

namespace glil {

enum class Op : std::uint8_t { Bot, Top, Var, Not, And, Or, Imp, Iff, Box, Dia, Rhd };

bool is_unary(Op op) noexcept;
bool is_binary(Op op) noexcept;

/// Immutable formula of the language with \Box and the binary modality |>.
///
/// A Formula is a handle to a shared, never-mutated node, so copies are cheap
/// and values may be shared freely between threads. Equality is structural.
/// Diamond is a constructor of its own; semantically it is always treated as
/// ~[]~.
class Formula {
 public:
  struct Node;

  static Formula Bot();
  static Formula Top();
  static Formula Var(unsigned index);
  static Formula Not(Formula a);
  static Formula And(Formula a, Formula b);
  static Formula Or(Formula a, Formula b);
  static Formula Imp(Formula a, Formula b);
  static Formula Iff(Formula a, Formula b);
  static Formula Box(Formula a);
  static Formula Dia(Formula a);
  static Formula Rhd(Formula a, Formula b);

  Op op() const noexcept;
  /// Only meaningful for Op::Var.
  unsigned var() const noexcept;
  /// First operand (the only one for unary nodes). Precondition: not a leaf.
  Formula lhs() const;
  /// Second operand. Precondition: binary node.
  Formula rhs() const;

  std::size_t hash() const noexcept;
  /// Address of the shared node; stable for the lifetime of any copy.
  const Node* identity() const noexcept { return node_.get(); }

  friend bool operator==(const Formula& a, const Formula& b) noexcept;
  friend bool operator!=(const Formula& a, const Formula& b) noexcept { return !(a == b); }
  /// Total structural order (operator, then variable index, then operands).
  friend bool operator<(const Formula& a, const Formula& b) noexcept;

 private:
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Op op, unsigned var, const Formula* a, const Formula* b);

  std::shared_ptr<const Node> node_;
};

int compare(const Formula& a, const Formula& b) noexcept;

struct FormulaStats {
  unsigned modal_depth = 0;
  std::size_t size = 0;
  std::set<unsigned> variables;
  bool is_closed = true;
  bool is_box_only = true;
};

FormulaStats stats(const Formula& f);

std::size_t size(const Formula& f);
unsigned modal_depth(const Formula& f);
std::set<unsigned> variables(const Formula& f);
bool is_closed(const Formula& f);
bool contains_rhd(const Formula& f);

/// n-fold box applied to f.
Formula box_power(Formula f, unsigned n);

}  // namespace glil

template <>
struct std::hash<glil::Formula> {
  std::size_t operator()(const glil::Formula& f) const noexcept { return f.hash(); }
};

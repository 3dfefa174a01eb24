#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glil/formula.hpp"
#include "glil/kripke.hpp"

namespace glil {

/// Signed formula of a tableau label: `truth` is the sign (T or F).
struct SignedFormula {
  bool truth;
  Formula formula;

  friend bool operator==(const SignedFormula&, const SignedFormula&) = default;
};

std::string render(const SignedFormula& s);

/// Node of a closed tableau. Nodes are shared between branches that reach
/// the same label, so a trace is a DAG.
///
/// rule is one of
///   "clash"      label contains T A and F A, T F, or F T
///   "alpha"      single child whose label saturates this one under the
///                non-branching rules
///   "beta"       one child per alternative of `principal`
///   "modal"      `principal` is a demand (F []A or T <>A) whose successor
///                label is the only child
///   "exhaustive" leaf emitted by the bounded search; not a tableau rule
struct ProofNode {
  std::vector<SignedFormula> label;
  std::string rule;
  std::optional<SignedFormula> principal;
  std::vector<std::shared_ptr<const ProofNode>> children;
};

using ProofTrace = std::shared_ptr<const ProofNode>;

struct GlVerdict {
  bool valid = false;
  /// Present iff !valid. Tree-like, with `root` set; the root refutes the formula.
  std::optional<KripkeModel> countermodel;
  /// Present iff valid.
  ProofTrace proof_trace;
};

/// Decides GL-validity with a signed tableau. The modal rule realizes
/// F []A under box context {T []B} as {T B, T []B, ..., F A, T []A}; the
/// extra T []A bounds the depth of every branch by the number of distinct
/// modal subformulas. Demands are expanded in subformula order and labels
/// are memoized, so verdicts and countermodels are reproducible.
///
/// Throws PreconditionError if f contains |>.
GlVerdict prove_gl(const Formula& f);

/// Number of distinct [] / <> subformulas. Bounds both the height and the
/// branching of countermodels produced by prove_gl.
unsigned modal_subformula_count(const Formula& f);

struct SearchBounds {
  unsigned max_depth;
  unsigned max_branching;
};

/// Bounds under which brute_force_gl is complete for f.
SearchBounds sufficient_bounds(const Formula& f);

/// Exhaustive search over tree models of height <= max_depth whose worlds
/// have at most max_branching children, over the variables of f. Trees are
/// enumerated up to the truth profile of their root, so equivalent subtrees
/// are explored once.
///
/// Throws PreconditionError if f contains |>.
GlVerdict brute_force_gl(const Formula& f, unsigned max_depth, unsigned max_branching);

/// Independent structural check of a closed tableau for `goal`: the root
/// label is {F goal} and every node is a correct rule application.
bool check_proof_trace(const ProofTrace& trace, const Formula& goal);

std::size_t proof_trace_size(const ProofTrace& trace);

}  // namespace glil

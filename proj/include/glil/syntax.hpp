#pragma once

#include <string>
#include <string_view>

#include "glil/formula.hpp"

namespace glil {

/// Parses the ASCII syntax
///
///   T F pN ~A []A <>A  A & B  A | B  A |> B  A -> B  A <-> B
///
/// Unary operators bind tightest, then & and | (one level, left
/// associative), then |> (non-associative), then -> and <-> (one level,
/// right associative). A bare `p` is read as p0. The Unicode symbols
/// ⊤ ⊥ ¬ ∧ ∨ → ↔ □ ◇ ▷ are accepted as aliases.
///
/// Throws ParseError.
Formula parse(std::string_view text);

/// Minimal-parentheses ASCII rendering; parse(render(f)) == f.
std::string render(const Formula& f);

}  // namespace glil

#pragma once

#include "glil/formula.hpp"

namespace glil {

/// Rewrites T, ~, &, |, <->, <> into the {F, ->, [], pN} core (|> is kept).
///   T = F -> F        ~A = A -> F          A | B = (A -> F) -> B
///   A & B = (A -> (B -> F)) -> F            <>A = [](A -> F) -> F
///   A <-> B = (A -> B) & (B -> A), then expanded
Formula to_core(const Formula& f);

/// The closed formula <><>T -> (T |> <>T) that codes the variable p0.
Formula coded_variable();

/// Translation of a one-variable GL formula into the closed fragment of IL:
///   F -> F,  p0 -> coded_variable(),  (A -> B) -> A' -> B',
///   []A -> [](<><>T -> A').
/// The input is first rewritten with to_core.
///
/// Throws PreconditionError on |> or on any variable other than p0.
Formula translate_dagger(const Formula& a);

/// Replaces every []A by ~A' |> F and every <>A by ~(A' |> F), bottom up.
/// The result contains neither [] nor <>.
Formula box_as_rhd(const Formula& f);

}  // namespace glil

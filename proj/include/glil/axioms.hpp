#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "glil/diagnostics.hpp"
#include "glil/formula.hpp"
#include "glil/veltman.hpp"

namespace glil {

enum class Scheme { J1, J2, J3, J4, J5, F, GL1, GL2, BoxRhd };

/// J1  [](A -> B) -> A |> B
/// J2  (A |> B) & (B |> C) -> A |> C
/// J3  (A |> C) & (B |> C) -> A | B |> C
/// J4  A |> B -> (<>A -> <>B)
/// J5  <>A |> A
/// F   <>A -> ~(A |> <>A)
/// GL1 [](A -> B) -> ([]A -> []B)
/// GL2 []([]A -> A) -> []A
/// BoxRhd  []A <-> ~A |> F
Formula instantiate(Scheme scheme, const Formula& a, const Formula& b, const Formula& c);

std::string_view scheme_name(Scheme scheme);
std::optional<Scheme> scheme_from_name(std::string_view name);
const std::array<Scheme, 9>& all_schemes();

/// Everything except F is valid on all Veltman models.
bool is_il_valid_scheme(Scheme scheme);

struct AxiomInstance {
  Formula a = Formula::Top();
  Formula b = Formula::Top();
  Formula c = Formula::Top();
};

/// Model-checks every instance at every world. A failing world is reported as
/// "<scheme> at w" with the instantiated formula as detail.
Diagnostics check_axiom_sweep(const VeltmanModel& m, Scheme scheme,
                              const std::vector<AxiomInstance>& instances);

}  // namespace glil

#pragma once

#include "json.hpp"

#include "glil/diagnostics.hpp"
#include "glil/kripke.hpp"
#include "glil/prover.hpp"
#include "glil/reduction.hpp"
#include "glil/veltman.hpp"

namespace glil::io {

using Json = nlohmann::ordered_json;

// Model documents list worlds as integers 0..n-1 (any order). `val` maps the
// decimal world id to the variable indices true there; missing worlds force
// nothing.
//
//   Kripke:  {"worlds":[..], "R":[[x,y],..], "val":{"w":[i,..]}, "root":w}
//   Veltman: {"worlds":[..], "R":[[x,y],..], "S":{"x":[[y,z],..]}, "val":{..}}
//
// Readers throw FormatError.

Json to_json(const KripkeModel& m);
Json to_json(const VeltmanModel& m);
Json to_json(const LiftedModel& m);
Json to_json(const Projection& p);
Json to_json(const Diagnostics& d);
Json to_json(const ProofTrace& trace);
Json to_json(const GlVerdict& v);
Json to_json(const CertifiedReduction& c);

KripkeModel kripke_from_json(const Json& j);
VeltmanModel veltman_from_json(const Json& j);

/// True if the document has an "S" member.
bool is_veltman_document(const Json& j);

}  // namespace glil::io

#pragma once

#include <json.hpp>

#include "symsq/bessel.hpp"
#include "symsq/metaplectic.hpp"
#include "symsq/symsq.hpp"
#include "symsq/tate.hpp"

namespace symsq {

using json = nlohmann::json;

// Encoders follow the descriptor schemas used by the CLI.  Decoders throw
// UnsupportedInput on malformed input.

json to_json(cplx z);
cplx complex_from_json(const json& j);

json to_json(const PadicNumber& a);  // {"v": int, "u": int} or "0"
PadicNumber padic_from_json(const Field& f, const json& j);

json to_json(const MultChar& chi);  // {"p", "n", "gen_exp": "a/b", "z": {...}}
MultChar multchar_from_json(const json& j);

json to_json(const LFactor& l);  // {"inverse_roots": [...], "rendered": str}
json to_json(const LaurentRational& r);

json to_json(const GL2& g);  // row-major [a, b, c, d]
GL2 gl2_from_json(const Field& f, const json& j);

json to_json(const GL2Rep& pi);
GL2Rep gl2rep_from_json(const json& j);

json to_json(const SchwartzFn& phi);
SchwartzFn schwartz_from_json(const Field& f, const json& j);

json to_json(const TateTriple& t);
json to_json(const BesselRow& row);

}  // namespace symsq

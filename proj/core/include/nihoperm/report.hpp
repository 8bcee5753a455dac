#pragma once

#include <string>

#include "nihoperm/gf2n.hpp"
#include "nihoperm/spectra.hpp"

namespace nihoperm {

/// {"n": 6, "irreducible_hex": "43", "primitive_hex": "2"}
std::string field_spec_json(const gf2n::FieldCtx& ctx);

/// {"engine": ..., "verdict": ..., "witness": hex|"x1,x2"|null,
///  "elapsed_ms": ..., "field": {...}}. elapsed_ms is 0 unless with_timing,
/// which keeps repeated runs byte-identical.
std::string report_json(const spectra::VerificationReport& r, bool with_timing);

/// "x1,x2" for a collision, the element otherwise.
std::string witness_hex(const spectra::Witness& w);

}  // namespace nihoperm

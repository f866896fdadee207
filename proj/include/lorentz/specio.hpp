#ifndef LORENTZ_SPECIO_HPP
#define LORENTZ_SPECIO_HPP

#include <string>

#include <json.hpp>

#include "lorentz/compactness.hpp"
#include "lorentz/norms.hpp"

namespace lorentz {
namespace specio {

using nlohmann::json;

// Sequence spec:
//   {"kind": "finite", "entries": [...]}
//   {"kind": "power", "c": number, "s": number}
//   {"kind": "geometric", "c": number, "r": number}
//   {"kind": "tabled", "entries": [...], "envelope": {...}}
// Envelope spec:
//   {"kind": "power_tail", "c": number, "s": number}
//   {"kind": "geometric_tail", "c": number, "r": number}
// Weight spec:
//   {"kind": "power", "beta": number}
//   {"kind": "prefix", "values": [...], "tail_beta": number}
// Family spec:
//   {"kind": "explicit", "members": [seq...]}
//   {"kind": "shift", "base": seq}
//   {"kind": "scaled_basis", "coeffs": seq}
//   {"kind": "dominated", "envelope": seq, "samples": [seq...]}

json to_json(const SequenceSpec& s);
json to_json(const WeightSpec& w);
json to_json(const FamilySpec& f);
json to_json(const Interval& iv);
json to_json(const DecompositionRecord& rec);
json to_json(const Certificate& cert);

SequenceSpec sequence_from_json(const json& j);
WeightSpec weight_from_json(const json& j);
FamilySpec family_from_json(const json& j);

/// "harmonic" -> PowerDecay(1), "invsqrt" -> PowerDecay(0.5),
/// "power:<beta>" -> PowerDecay(beta).
WeightSpec weight_from_shorthand(const std::string& name);

/// FNV-1a hash of the canonical dump, as a hex string (inputs digest).
std::string digest(const json& j);

} // namespace specio
} // namespace lorentz

#endif

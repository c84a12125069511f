#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "cuntz/element.hpp"
#include "cuntz/endomorphism.hpp"
#include "cuntz/parafermion.hpp"
#include "cuntz/report.hpp"
#include "cuntz/representation.hpp"
#include "cuntz/rfs.hpp"

namespace cuntz {

// Keys keep insertion order so output is byte-stable.
using Json = nlohmann::ordered_json;

// Schemas (coefficients and basis indices are decimal strings):
//   element      {"d": 2, "terms": [{"coeff": "1/2", "create": [1],
//                                    "annihilate": [2]}]}
//   state vector {"terms": [{"index": "4", "coeff": "1"}]}
//   endomorphism {"d": 2, "images": [element, ...]}
//   rfs system   {"type": "rfs", "d": 4, "seeds": [element, ...],
//                 "zeta": [{"sign": 1, "left": 1, "right": 1}, ...],
//                 "phi": "rho" | endomorphism}
//   green system {"type": "rpfs", "d": 4,
//                 "triads": [{"seed": element, "zeta": [...], "phi": ...}]}
// All readers throw ParseError on schema violations.

Json to_json(const Element& x);
Element element_from_json(const Json& j);

Json to_json(const StateVector& v);
StateVector state_from_json(const Json& j);

Json to_json(const Endomorphism& e);
/// Validates the images; throws ValidationError if they do not define one.
Endomorphism endomorphism_from_json(const Json& j);

Json to_json(const RfsSystem& sys);
RfsSystem rfs_from_json(const Json& j);

Json to_json(const GreenSystem& g);
GreenSystem green_from_json(const Json& j);

/// {"check", "params", "pass", "outcome", "cases", "witness"?}.
Json to_json(const CheckResult& r);
/// One JSON object per line, each line terminated by '\n'.
std::string to_json_lines(const Report& r);

}  // namespace cuntz

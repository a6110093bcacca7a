#pragma once

#include <json.hpp>
#include <string>

#include "newform_weyl/exactnum/symbolic.hpp"

namespace nw {

using ordered_json = nlohmann::ordered_json;

/// Canonical JSON form
///   {"over_pi": bool, "const": "n/d", "log_pi": "n/d", "logs": {"p": "n/d", ...}}
/// with rationals in lowest terms ("n" when integral) and logs keyed by
/// ascending prime.
ordered_json to_json(const SymbolicCoefficient& x);
std::string to_canonical_json(const SymbolicCoefficient& x);

/// Inverse of to_json; throws DomainError on malformed input.
SymbolicCoefficient symbolic_from_json(const ordered_json& j);
SymbolicCoefficient symbolic_from_json(const std::string& text);

}  // namespace nw

#pragma once

#include <string>

#include <json.hpp>

#include "mcuforge/circuit.hpp"
#include "mcuforge/su2.hpp"

namespace mcuforge {

/// {"matrix": [[re, im] x 4]} row-major.
nlohmann::json unitary_to_json(const Unitary2& u);
Unitary2 unitary_from_json(const nlohmann::json& j);

/// {width, label, gates: [{kind, control?, target, matrix}]}
nlohmann::json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const nlohmann::json& j);

std::string circuit_to_json_string(const Circuit& c);
Circuit circuit_from_json_string(const std::string& text);

/// OpenQASM 2.0 with u3/cx only. The accumulated global phase, when nonzero,
/// is recorded as a `// global_phase:` comment. Circuits containing controlled
/// gates other than CX are rejected ("lowering required").
std::string to_qasm(const Circuit& c);

}  // namespace mcuforge

#pragma once

#include <string>

#include <json.hpp>

#include "qclaw/graph.hpp"
#include "qclaw/seed.hpp"

namespace qclaw {

using Json = nlohmann::json;

inline constexpr const char* kSchemaTag = "qclaw/1";

/// Sorted list of {"coeff": <qring text>, "exponent": [ints]}; byte-stable.
Json torus_element_to_json(const TorusElement& f);
TorusElement torus_element_from_json(const Json& j);

/// Full seed schema; round-trips bit-exactly. Indices are 1-based on the
/// wire. Carries the ambient torus matrix and, when known, the Cartan
/// matrix and the word, so a seed file is self-contained for every
/// downstream command.
Json seed_to_json(const QuantumSeed& seed);
QuantumSeed seed_from_json(const Json& j);

Json graph_to_json(const ExchangeGraph& g, bool include_seeds = true);
std::string graph_to_dot(const ExchangeGraph& g);

} // namespace qclaw

#pragma once

#include <json.hpp>

#include "flipforge/factors.hpp"
#include "flipforge/packing.hpp"
#include "flipforge/verification.hpp"

namespace flipforge {

// Stable JSON views (nlohmann objects keep keys sorted). Reports compress
// the per-vertex tables into distinct stat profiles with multiplicities,
// ordered by first occurrence, so diffs stay small and deterministic.
nlohmann::json report_to_json(const FlipReport& report);
nlohmann::json census_to_json(const TriangleCensus& census);
nlohmann::json decomposition_to_json(const FactorDecomposition& dec);
nlohmann::json packing_to_json(const PackingResult& result);
nlohmann::json witness_to_json(const NecessityWitness& witness);
nlohmann::json demo_to_json(const PipelineDemoReport& report);

}  // namespace flipforge

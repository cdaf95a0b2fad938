#pragma once

#include <json.hpp>
#include <string>

#include "slice/coloring.hpp"
#include "slice/replay.hpp"
#include "slice/udg.hpp"

namespace slice {

using Json = nlohmann::json;

// Point-set schema:
//   {"backing":"exact"|"float","n":int,"k":int,
//    "coords":[["p/q",...]|[float,...], ...]}
// Rationals travel as decimal strings "p/q".
Json exact_points_to_json(const std::vector<ExactPoint>& pts, int n, int k);
Json float_points_to_json(const std::vector<FloatPoint>& pts);

// Graph schema adds "edges", "predicate" and optionally "slice".
Json graph_to_json(const UnitDistanceGraph& g);
UnitDistanceGraph graph_from_json(const Json& j);

Json certificate_to_json(const ColoringCertificate& cert);
Json chromatic_result_to_json(const ChromaticResult& res);

Json report_to_json(const ConstructionReport& rep);

// Write-to-temp-then-rename; the destination is never observed half-written.
void atomic_write(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);

}  // namespace slice

#pragma once

// JSON interchange for graphs:
//   {"vertices": N,
//    "edges": [[u, v, {"num": "p", "den": "q"}] | [u, v, {"poly": [c0, c1, ...]}], ...],
//    "kind": "...", "meta": {...}, "columns": [[...], ...]}
// Indices are 0-based. Numbers may be JSON integers or decimal strings;
// polynomial weights must be monomials.

#include <string>

#include <nlohmann/json.hpp>

#include "dimers/graph.hpp"

namespace dimers {

nlohmann::json to_json(const WeightedMultigraph& g);
WeightedMultigraph graph_from_json(const nlohmann::json& j);

/// {"graph": {...}, "involution": [...], "axis": [...], "side": ["above" | "below" | "axis", ...]}
nlohmann::json to_json(const SymmetricGraph& sg);
SymmetricGraph symmetric_graph_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatPolynomial& p);

}  // namespace dimers

#pragma once

#include <json.hpp>
#include <vector>

#include "splitorder/apartments.hpp"
#include "splitorder/correspondence.hpp"
#include "splitorder/exponent_matrix.hpp"
#include "splitorder/local_field.hpp"

namespace splitorder {

// JSON forms used on the command line. Every *_from_json throws
// Error(ErrorCode::Parse) on malformed structure, and the usual domain
// errors (NonZeroDiagonal, ...) on well-formed but invalid values.

/// {"n": 3, "nu": [[0,0,1],[3,0,1],[3,2,0]]}
nlohmann::json to_json(const ExponentMatrix& nu);
ExponentMatrix exponent_matrix_from_json(const nlohmann::json& j);

/// [[0,0,-1],[0,3,3]]; inner arrays are normalized to start with 0.
nlohmann::json to_json(const std::vector<LatticePoint>& points);
std::vector<LatticePoint> points_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RoundtripReport& report);

/// {"prime": 2, "entries": [["1/1","-1/2"],["0/1","1/1"]]}
nlohmann::json to_json(const LocalMatrix& m);
LocalMatrix local_matrix_from_json(const nlohmann::json& j);

/// {"gamma": [["1/1", ...], ...], "prime": 2, "nu": [[0, ...], ...]}
nlohmann::json to_json(const GeneralSplitOrder& s);
GeneralSplitOrder general_split_order_from_json(const nlohmann::json& j);

}  // namespace splitorder

#pragma once

/// JSON documents for the CLI. Every exact number is serialized as a string
/// in the scalar grammar (never a float); SVG output is the only place
/// floating point appears.

#include <json.hpp> // vendored nlohmann::json

#include "loopnt/demo3.hpp"
#include "loopnt/ntcore.hpp"
#include "loopnt/oracle.hpp"

namespace loopnt {

nlohmann::json json_scalar_pair(const QuadVec2& v);

/// {"kind", "dir"/"right"/"left", "right_closed"/"left_closed"} per the
/// published schema.
nlohmann::json to_json(const NTSet& s);

/// Adds "case", "eigenvalues" ([s, s] or null) and "witnesses" ({name: [s,s]}).
nlohmann::json to_json(const AnalysisReport& r);

/// Single-row loops flatten to their row report; multi-row loops keep the
/// top-level NTSet plus a "rows" array and "case": "Intersection".
nlohmann::json to_json(const LoopAnalysis& a);

nlohmann::json to_json(const SimResult& r);
nlohmann::json to_json(const FuzzReport& r);
nlohmann::json to_json(const BoundaryCheck& c, std::size_t preview);

} // namespace loopnt

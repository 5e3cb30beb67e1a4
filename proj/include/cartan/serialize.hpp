#pragma once

// JSON forms of the library's result types. Big integers are decimal
// strings.

#include <json.hpp>

#include "cartan/bounds.hpp"
#include "cartan/graded.hpp"
#include "cartan/words.hpp"

namespace cartan {

/// {"<degree>": {"free": r, "torsion": ["2", "4", ...]}, ...} with every
/// degree 0..max_degree present, so the cap survives a round trip.
nlohmann::json to_json(const GradedAbelianGroup& g);
GradedAbelianGroup graded_from_json(const nlohmann::json& j);

/// {"n", "d", "primes": [{"p", "r", "bound"}], "theorem_a", "corollary_b",
///  "sharp": {"value", "source"} | null}
nlohmann::json to_json(const BoundReport& r);
BoundReport bound_report_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundComparison& c);

nlohmann::json to_json(const WordEntry& w, bool ascii = false);

}  // namespace cartan

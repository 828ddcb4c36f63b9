#pragma once

#include <json.hpp>

#include "arrhom/theorems.hpp"

namespace arrhom {

using Json = nlohmann::json;

// Arrangements serialize as exact rational strings:
//   {"ambient_dim": 2, "hyperplanes": [["1","0"],["0","1"],["1","1"]]}
// Input additionally accepts {"preset": "boolean"|"braid", "n": k}.
// Malformed input throws ValidationError naming the offending entry.
Json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const Json& j);
Arrangement load_arrangement_file(const std::string& path);
Arrangement preset_by_name(const std::string& name, int n);

Json betti_to_json(const BettiTable& t);
BettiTable betti_from_json(const Json& j);

Json report_to_json(const VerificationReport& r);
VerificationReport report_from_json(const Json& j);

// Dump formats (output only): per-degree dimensions, generator labels and
// boundary triplets; per-element stalk dimensions and cover maps.
Json complex_to_json(const ChainComplex& c);
Json sheaf_to_json(const Sheaf& f);

}  // namespace arrhom

#pragma once

#include <json.hpp>

#include "lierep/hpz.hpp"
#include "lierep/tensor.hpp"

namespace lierep::json {

using nlohmann::json;

// Integers that fit int64 are JSON numbers, larger ones decimal strings.
json from_bigint(const BigInt& v);
BigInt to_bigint(const json& j);

json from_weight(const Weight& w);
Weight to_weight(const json& j);

json system_json(const RootSystem& rs);
const RootSystem& system_from_json(const json& j);

// {"system": {...}, "left": [..], "right": [..], "components": [{"weight": [..], "mult": m}, ...]}
json from_decomposition(const Decomposition& d);
Decomposition to_decomposition(const json& j);

// {"pair": id, "levels": [{"level": l, "central": c, "ktypes": [{"ss": [..], "central": c, "mult": m}]}]}
json from_series(const KCharacterSeries& s);
// The pair record must match the "pair" field.
KCharacterSeries to_series(const json& j, const HermitianPair& pair);

}  // namespace lierep::json

#pragma once

#include <json.hpp>

#include "sitwist/braid.hpp"
#include "sitwist/free_group.hpp"
#include "sitwist/homology.hpp"
#include "sitwist/lamination.hpp"
#include "sitwist/twist.hpp"

namespace sitwist {

using Json = nlohmann::json;

// {"strands": n, "word": [+-i, ...]}
Json to_json(const BraidWord& w);
BraidWord braid_from_json(const Json& j);

// {"rank": k, "word": [+-i, ...]}
Json to_json(const FreeWord& w);
FreeWord free_word_from_json(const Json& j);

// {"punctures": n, "a": [...], "b": [...]}; big entries are written as
// decimal strings when they do not fit in 64 bits.
Json to_json(const LoopCoordinates& c);
LoopCoordinates loop_from_json(const Json& j);

// {"punctures": n, "base": [i, j], "prep": <braid>}
Json to_json(const CurveSpec& c);
CurveSpec curve_from_json(const Json& j);
// {"punctures": n, "base": [i, i+1], "prep": <braid>}
Json to_json(const ArcSpec& a);
ArcSpec arc_from_json(const Json& j);

// Rows of {"exponent": coefficient} objects.
Json to_json(const LaurentMatrix& m);
LaurentMatrix laurent_from_json(const Json& j);
Json to_json(const IntMatrix& m);

}  // namespace sitwist

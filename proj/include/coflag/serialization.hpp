#pragma once

#include <string>

#include <json.hpp>

#include "coflag/spaces.hpp"

namespace coflag {

using Json = nlohmann::ordered_json;

// JSON schema (schema_version 1) for presentations:
//   { "schema_version": 1, "name": str, "family": "A"|"B"|"C"|"D"|"G2"|"custom",
//     "rank": int, "variables": [str...],
//     "order": { "kind": "lex"|"grlex"|"grevlex", "precedence": [int...] },
//     "generators": [str...],  // polynomial text in the listed variables
//     "degrees_G": [int...], "degrees_H": [int...], "exterior_degrees": [int...],
//     "dimension": int,
//     "basis_bounds": [int...]?, "product_condition": bool? }
// and for restrictions:
//   { "schema_version": 1, "variables": [str...], "order": {...},
//     "images": [str...], "split_rank": int }
// Serialization is deterministic (fixed key order, canonical polynomial
// text), and presentation_to_json round-trips through
// presentation_from_json.

Json presentation_to_json(const SpacePresentation& p);
SpacePresentation presentation_from_json(const Json& j);

Json order_to_json(const MonomialOrder& order);
MonomialOrder order_from_json(const Json& j);

struct RestrictionFile {
    RestrictionData data;
    MonomialOrder order;
};

Json restriction_to_json(const RestrictionFile& r);
RestrictionFile restriction_from_json(const Json& j);

// File helpers; throw std::invalid_argument with the file name on parse or
// validation failure.
SpacePresentation load_presentation(const std::string& path);
RestrictionFile load_restriction(const std::string& path);

}  // namespace coflag

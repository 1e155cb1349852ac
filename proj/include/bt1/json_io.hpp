#pragma once

// JSON forms of the core structures.  Object keys follow the documented
// order, so serialization is deterministic:
//   permutation  {"elements":[...], "f":[...], "v":[...], "perm":{...}}
//   type         {"s":.., "r":.., "phi":[..], "nu":[..], "rho":[..]}
//   sequence     {"g":.., "psi":[..], "rle":"u2,c1"}
//   invariants   {"g":.., "p_rank":.., "a":.., "s11":.., "u11":.., "sel_dim":..}
// Readers validate shape and cross-field consistency (ParseError) and, for
// permutations, membership of every mapped element (UnknownElement).

#include <json.hpp>

#include "bt1/canonical.hpp"
#include "bt1/eo.hpp"
#include "bt1/invariants.hpp"
#include "bt1/permdata.hpp"

namespace bt1 {

using Json = nlohmann::ordered_json;

Json to_json(const PartitionedPermutation& pp);
PartitionedPermutation perm_from_json(const Json& j);

Json to_json(const CanonicalType& ct);
CanonicalType canonical_from_json(const Json& j);

Json to_json(const ElementarySequence& es);
ElementarySequence es_from_json(const Json& j);

Json to_json(const InvariantBundle& b);
InvariantBundle bundle_from_json(const Json& j);

}  // namespace bt1

#pragma once

// JSON forms of the result types, schema "superhom/1". Every to_json has a
// matching parser so reports round-trip.

#include "superhom/varieties.hpp"

#include "json.hpp"

namespace superhom {

using Json = nlohmann::json;

inline constexpr const char* kSchema = "superhom/1";

Json to_json(const ComplexityEstimate& c);
ComplexityEstimate complexity_from_json(const Json& j);

Json to_json(const ResolutionReport& r);
ResolutionReport resolution_from_json(const Json& j);

Json to_json(const ExtTable& t);
ExtTable ext_from_json(const Json& j);

Json to_json(const SupportResult& s);
SupportResult support_from_json(const Json& j);

Json to_json(const OrbitCatalog& c, const LieSuperalgebra& g);
OrbitCatalog orbits_from_json(const Json& j);

Json to_json(const CartanWindow& w);
CartanWindow cartan_from_json(const Json& j);

Json vector_to_json(const SparseVector& v);
SparseVector vector_from_json(const Json& j);

}  // namespace superhom

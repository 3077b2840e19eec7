#pragma once

#include <string>

#include "json.hpp"
#include "toric/center.hpp"
#include "toric/idempotents.hpp"
#include "toric/monoid.hpp"

namespace toric {

using json = nlohmann::json;

/// Integers serialize as JSON numbers while they fit in 64 bits and as
/// decimal strings beyond that; both forms are accepted on input.
json int_to_json(const Int& v);
Int int_from_json(const json& j);

json vec_to_json(const Vec& v);
Vec vec_from_json(const json& j);

json cone_to_json(const Cone& c);
Cone cone_from_json(const json& j);

json pairs_to_json(const Face& tau, const DemazureRootPairSet& pairs);
/// Reads a pair set against sigma; distinguished rays are recomputed from
/// the root inequalities.
DemazureRootPairSet pairs_from_json(const Cone& sigma, const json& j);
std::vector<std::size_t> tau_rays_from_json(const json& j);

json monoid_to_json(const RootMonoid& X);
RootMonoid monoid_from_json(const json& j);

json point_to_json(const RootMonoid& X, const Point& p);
/// Accepts values on any basis of the face lattice; they are re-expressed on
/// the monoid's canonical basis.
Point point_from_json(const RootMonoid& X, const json& j);

json locus_to_json(const RootMonoid& X, const IdempotentLocus& locus);
json center_to_json(const CenterLocus& locus);

json parse_json(const std::string& text);
json load_json_file(const std::string& path);

}  // namespace toric

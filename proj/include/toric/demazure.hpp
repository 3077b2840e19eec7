#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/// A Demazure root of a cone: a dual-lattice vector pairing to -1 with one
/// distinguished ray and nonnegatively with every other ray.
struct DemazureRoot {
  Vec vector;
  std::size_t ray_index;  // index of the distinguished ray in the cone

  bool operator==(const DemazureRoot& o) const = default;
};

struct RootPair {
  DemazureRoot e1;
  DemazureRoot e2;
};

/// Root pairs indexed by the rays of a regular face, in the order of the
/// face's ray_indices list.
struct DemazureRootPairSet {
  std::vector<RootPair> pairs;

  std::size_t size() const { return pairs.size(); }
  Vec difference(std::size_t r) const { return sub(pairs[r].e2.vector, pairs[r].e1.vector); }
};

/// Result of a compatibility check. `kronecker_violations` holds (r, s,
/// member) triples where member 1 or 2 names the offending root of pair r
/// against face ray s; `not_roots` holds (r, member) pairs failing the root
/// inequalities against the full ray list.
struct RootSetCheck {
  bool compatible = true;
  std::vector<std::tuple<std::size_t, std::size_t, int>> kronecker_violations;
  std::vector<std::pair<std::size_t, int>> not_roots;

  std::string describe() const;
};

/// Distinguished ray index when e is a Demazure root of sigma, else empty.
std::optional<std::size_t> is_demazure_root(const Cone& sigma, const Vec& e);

/// All roots with distinguished ray `ray_index` and max-norm at most `bound`,
/// in lexicographic order.
std::vector<DemazureRoot> enumerate_roots(const Cone& sigma, std::size_t ray_index, const Int& bound);

RootSetCheck is_compatible_set(const Cone& sigma, const Face& tau, const DemazureRootPairSet& pairs);

/// Builds a compatible pair set with prescribed differences e1^(r) - e2^(r) =
/// c_r, following the existence argument: a Kronecker solution u_r is pushed
/// into the root region along the relative interior of the dual face of tau,
/// then both roots are located inside the translated dual face.
DemazureRootPairSet compatible_pairs_with_differences(const Cone& sigma, const Face& tau,
                                                      const std::vector<Vec>& differences);

}  // namespace toric

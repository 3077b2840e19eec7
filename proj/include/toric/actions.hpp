#pragma once

#include <vector>

#include "toric/monoid.hpp"

namespace toric {

/// Two torus orbits joined by a single H_e-orbit; gamma2 = cone(gamma1, rho)
/// for the root's distinguished ray rho, with dim gamma2 = dim gamma1 + 1.
struct OrbitPair {
  Face gamma1;
  Face gamma2;
};

/// Ambient torus action: chi^u(t.x) = t^u chi^u(x). The torus element is
/// given by nonzero values on the standard basis of M.
Point ambient_torus_action(const RootMonoid& X, const std::vector<Rat>& t, const Point& x);

/// One-parameter subtorus of a primitive vector p: chi^u -> t^{<p,u>} chi^u.
Point ray_subtorus_action(const RootMonoid& X, const Vec& p, const Rat& t, const Point& x);

/// Root subgroup H_e at parameter a, computed through the terminating
/// exponential series of the homogeneous locally nilpotent derivation of
/// degree e:
///   chi^u(a.x) = sum_m C(<rho,u>, m) a^m chi^{u+me}(x).
/// The series is regular on all of X_sigma, so boundary landings (support
/// drops) and flows out of smaller orbits are both covered.
Point root_subgroup_action(const RootMonoid& X, const DemazureRoot& e, const Rat& a, const Point& x);

/// All H_e-connected orbit pairs of the cone: faces gamma with rho not a ray
/// of gamma, e in gamma^perp, and cone(gamma, rho) a face of sigma.
std::vector<OrbitPair> he_connected_pairs(const Cone& sigma, const DemazureRoot& e);

}  // namespace toric

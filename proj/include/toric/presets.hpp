#pragma once

#include <vector>

#include "toric/monoid.hpp"

namespace toric {

/// Root monoid on affine n-space: sigma is the orthant, tau the face of the
/// first k coordinate rays, and the root pair of coordinate r carries the
/// exponent tuples a_r and b_r (length n-k, nonnegative), giving
///   x * y = (x_1 y^{a_1} + y_1 x^{b_1}, ..., x_k y^{a_k} + y_k x^{b_k},
///            x_{k+1} y_{k+1}, ..., x_n y_n).
RootMonoid affine_space_monoid(std::size_t n, std::size_t k, const std::vector<Vec>& a,
                               const std::vector<Vec>& b);

struct CylinderParams {
  Int a1, b1, a2, b2;  // roots of p1: (-1,0,a1,b1), (-1,0,a2,b2)
  Int c1, d1, c2, d2;  // roots of p2: (0,-1,c1,d1), (0,-1,c2,d2)
};

/// Root monoid on the cylinder over the quadratic cone, X = {x1 x2 = x4 x5}
/// in A^5. Requires a1,a2,c1,c2 >= 0 and b1,b2,d1,d2 >= 1.
RootMonoid quadric_cylinder_monoid(const CylinderParams& p);

/// The coordinate characters q_i with x_i = chi^{q_i} for the cylinder
/// monoid, in the order x_1 .. x_5.
std::vector<Vec> cylinder_coordinates();

}  // namespace toric

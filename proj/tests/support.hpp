#pragma once

#include <algorithm>
#include <vector>

#include "toric/monoid.hpp"
#include "toric/presets.hpp"
#include "toric/rng.hpp"

namespace toric::testsupport {

inline Cone orthant(std::size_t n) {
  std::vector<Vec> rays;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = 1;
    rays.push_back(e);
  }
  return Cone::from_generators(n, rays);
}

inline Mat random_unimodular(std::size_t n, Rng& rng) {
  Mat u = identity_mat(n);
  for (int step = 0; step < 12; ++step) {
    const std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    const std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n) - 1));
    if (i == j) continue;
    const Int c = rng.uniform(-2, 2);
    for (std::size_t t = 0; t < n; ++t) u[t][i] += c * u[t][j];
  }
  return u;
}

struct ConeWithFace {
  Cone sigma;
  Face tau;
};

/// A full-dimensional cone with a regular face of dimension face_dim: a
/// unimodular image of the orthant, of a padded non-smooth simplicial cone,
/// or of a padded non-simplicial quadric cone.
inline ConeWithFace random_cone_with_regular_face(std::size_t n, std::size_t face_dim, Rng& rng) {
  const Mat u = random_unimodular(n, rng);
  std::vector<Vec> gens;
  std::vector<Vec> tau_gens;

  const long shape = n < 3 ? 0 : rng.uniform(0, n >= 4 && face_dim + 3 <= n + 1 ? 2 : 1);
  if (shape == 2) {
    // Quadric cone {x1 x2 = x3 x4}-style block (non-simplicial) padded by an
    // orthant; the padded axes are regular rays.
    std::vector<Vec> block;
    for (const auto& b : {Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 1, 1}, Vec{1, 0, 1}}) {
      Vec g = zero_vec(n);
      for (std::size_t i = 0; i < 3; ++i) g[i] = b[i];
      block.push_back(g);
    }
    for (auto& g : block) gens.push_back(mat_apply(u, g));
    for (std::size_t i = 3; i < n; ++i) {
      Vec e = zero_vec(n);
      e[i] = 1;
      gens.push_back(mat_apply(u, e));
      if (tau_gens.size() < face_dim) tau_gens.push_back(gens.back());
    }
    if (tau_gens.size() < face_dim) tau_gens.push_back(gens[0]);
    if (tau_gens.size() < face_dim) tau_gens.push_back(gens[1]);
  } else if (shape == 0) {
    for (std::size_t i = 0; i < n; ++i) {
      Vec e = zero_vec(n);
      e[i] = 1;
      gens.push_back(mat_apply(u, e));
      if (i < face_dim) tau_gens.push_back(gens.back());
    }
  } else {
    // A_m singular surface cone padded by an orthant; the padded axes and
    // the first ray of the singular block are regular rays.
    const Int m = rng.uniform(2, 3);
    Vec g1 = zero_vec(n), g2 = zero_vec(n);
    g1[0] = 1;
    g2[0] = 1;
    g2[1] = m;
    gens.push_back(mat_apply(u, g1));
    gens.push_back(mat_apply(u, g2));
    for (std::size_t i = 2; i < n; ++i) {
      Vec e = zero_vec(n);
      e[i] = 1;
      gens.push_back(mat_apply(u, e));
      if (tau_gens.size() < face_dim) tau_gens.push_back(gens.back());
    }
    if (tau_gens.size() < face_dim) tau_gens.push_back(gens.front());
  }

  const Cone sigma = Cone::from_generators(n, gens);
  std::vector<std::size_t> idx;
  for (const auto& t : tau_gens) {
    const Vec p = primitive(t);
    for (std::size_t i = 0; i < sigma.rays().size(); ++i)
      if (sigma.rays()[i] == p) idx.push_back(i);
  }
  std::sort(idx.begin(), idx.end());
  const auto tau = face_from_rays(sigma, idx);
  if (!tau || idx.size() != face_dim) throw std::logic_error("random_cone_with_regular_face: face construction failed");
  return ConeWithFace{sigma, *tau};
}

/// Random difference vectors in tau-perp ∩ M.
inline std::vector<Vec> random_differences(const Cone& sigma, const Face& tau, Rng& rng) {
  const auto basis = perp_lattice_basis(sigma, tau);
  std::vector<Vec> out;
  for (std::size_t r = 0; r < tau.ray_indices.size(); ++r) {
    Vec c = zero_vec(sigma.ambient_rank());
    if (rng.uniform(0, 3) != 0) {
      for (const auto& b : basis) c = add(c, scale(rng.uniform(-2, 2), b));
    }
    out.push_back(c);
  }
  return out;
}

/// Values of the coordinates x_i = chi^{u_i} of a point, for a list of
/// coordinate characters.
inline std::vector<Rat> coordinates(const RootMonoid& X, const std::vector<Vec>& chars, const Point& p) {
  std::vector<Rat> out;
  for (const auto& u : chars) out.push_back(X.evaluate(p, u));
  return out;
}

/// Closed-form product on affine space:
///   (x * y)_r = x_r y^{a_r} + y_r x^{b_r} for r < k, x_i y_i beyond.
inline std::vector<Rat> affine_closed_form(std::size_t n, std::size_t k, const std::vector<Vec>& a,
                                           const std::vector<Vec>& b, const std::vector<Rat>& x,
                                           const std::vector<Rat>& y) {
  std::vector<Rat> z(n);
  for (std::size_t r = 0; r < k; ++r) {
    Rat ya = 1, xb = 1;
    for (std::size_t j = k; j < n; ++j) {
      ya *= pow_rat(y[j], a[r][j - k]);
      xb *= pow_rat(x[j], b[r][j - k]);
    }
    z[r] = x[r] * ya + y[r] * xb;
  }
  for (std::size_t i = k; i < n; ++i) z[i] = x[i] * y[i];
  return z;
}

/// The five-coordinate closed form of the cylinder monoid.
inline std::vector<Rat> cylinder_closed_form(const CylinderParams& p, const std::vector<Rat>& x,
                                             const std::vector<Rat>& y) {
  auto pw = [](const Rat& v, const Int& e) { return pow_rat(v, e); };
  std::vector<Rat> z(5);
  z[0] = x[0] * pw(y[2], p.a1) * pw(y[3], p.b1) + y[0] * pw(x[2], p.a2) * pw(x[3], p.b2);
  z[1] = x[1] * pw(y[2], p.c1) * pw(y[3], p.d1) + y[1] * pw(x[2], p.c2) * pw(x[3], p.d2);
  z[2] = x[2] * y[2];
  z[3] = x[3] * y[3];
  z[4] = x[4] * pw(y[2], p.a1 + p.c1) * pw(y[3], p.b1 + p.d1 - 1) +
         y[4] * pw(x[2], p.a2 + p.c2) * pw(x[3], p.b2 + p.d2 - 1) +
         x[0] * pw(x[2], p.c2) * pw(x[3], p.d2 - 1) * y[1] * pw(y[2], p.a1) * pw(y[3], p.b1 - 1) +
         y[0] * pw(y[2], p.c1) * pw(y[3], p.d1 - 1) * x[1] * pw(x[2], p.a2) * pw(x[3], p.b2 - 1);
  return z;
}

/// Random point on the open orbit.
inline Point random_open_point(const RootMonoid& X, Rng& rng) {
  const auto zero = face_from_rays(X.sigma(), {});
  std::vector<Rat> values;
  for (std::size_t l = 0; l < X.face_basis(*zero).size(); ++l) values.push_back(rng.nonzero_rat());
  return X.make_point(*zero, std::move(values));
}

/// Random point on a random orbit (including boundary orbits).
inline Point random_point(const RootMonoid& X, Rng& rng) {
  const auto& all = X.all_faces();
  const Face& gamma = all[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(all.size()) - 1))];
  std::vector<Rat> values;
  for (std::size_t l = 0; l < X.face_basis(gamma).size(); ++l) values.push_back(rng.nonzero_rat());
  return X.make_point(gamma, std::move(values));
}

/// Random invertible point via the group coordinates.
inline Point random_invertible_point(const RootMonoid& X, Rng& rng) {
  GroupElement g = X.group_identity();
  for (auto& a : g.alpha) a = rng.small_rat();
  for (auto& t : g.torus) t = rng.nonzero_rat();
  return X.to_point(g);
}

}  // namespace toric::testsupport

#include "toric/presets.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

// Position of the ray equal to `v` in the cone's (sorted) ray list.
std::size_t ray_position(const Cone& sigma, const Vec& v) {
  for (std::size_t i = 0; i < sigma.rays().size(); ++i)
    if (sigma.rays()[i] == v) return i;
  throw std::logic_error("ray_position: ray not found");
}

Face face_of_rays(const Cone& sigma, const std::vector<Vec>& rays) {
  std::vector<std::size_t> idx;
  for (const auto& v : rays) idx.push_back(ray_position(sigma, v));
  std::sort(idx.begin(), idx.end());
  const auto f = face_from_rays(sigma, idx);
  if (!f) throw std::logic_error("face_of_rays: not a face");
  return *f;
}

}  // namespace

RootMonoid affine_space_monoid(std::size_t n, std::size_t k, const std::vector<Vec>& a,
                               const std::vector<Vec>& b) {
  if (k > n) throw std::invalid_argument("affine_space_monoid: k must not exceed n");
  if (a.size() != k || b.size() != k)
    throw std::invalid_argument("affine_space_monoid: need one exponent tuple per unipotent coordinate");
  for (const auto* rows : {&a, &b})
    for (const auto& row : *rows) {
      if (row.size() != n - k) throw std::invalid_argument("affine_space_monoid: exponent tuple length must be n-k");
      for (const auto& e : row)
        if (e < 0) throw std::invalid_argument("affine_space_monoid: exponents must be nonnegative");
    }

  std::vector<Vec> basis;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = 1;
    basis.push_back(e);
  }
  const Cone sigma = Cone::from_generators(n, basis);
  std::vector<Vec> tau_rays(basis.begin(), basis.begin() + k);
  const Face tau = face_of_rays(sigma, tau_rays);

  DemazureRootPairSet pairs;
  pairs.pairs.resize(k);
  for (std::size_t pos = 0; pos < k; ++pos) {
    const std::size_t idx = tau.ray_indices[pos];
    const Vec& ray = sigma.rays()[idx];
    std::size_t r = 0;
    while (ray[r] == 0) ++r;  // the coordinate axis of this ray

    Vec e1 = zero_vec(n), e2 = zero_vec(n);
    e1[r] = e2[r] = -1;
    for (std::size_t j = k; j < n; ++j) {
      e1[j] = a[r][j - k];
      e2[j] = b[r][j - k];
    }
    pairs.pairs[pos] = RootPair{DemazureRoot{e1, idx}, DemazureRoot{e2, idx}};
  }
  return RootMonoid::build(sigma, tau, pairs);
}

std::vector<Vec> cylinder_coordinates() {
  return {Vec{1, 0, 0, 0}, Vec{0, 1, 0, 0}, Vec{0, 0, 1, 0}, Vec{0, 0, 0, 1}, Vec{1, 1, 0, -1}};
}

RootMonoid quadric_cylinder_monoid(const CylinderParams& p) {
  for (const Int* v : {&p.a1, &p.a2, &p.c1, &p.c2})
    if (*v < 0) throw std::invalid_argument("quadric_cylinder_monoid: a and c parameters must be nonnegative");
  for (const Int* v : {&p.b1, &p.b2, &p.d1, &p.d2})
    if (*v < 1) throw std::invalid_argument("quadric_cylinder_monoid: b and d parameters must be positive");

  const Vec p1{1, 0, 0, 0}, p2{0, 1, 0, 0}, p3{0, 0, 1, 0}, p4{0, 1, 0, 1}, p5{1, 0, 0, 1};
  const Cone sigma = Cone::from_generators(4, {p1, p2, p3, p4, p5});
  const Face tau = face_of_rays(sigma, {p1, p2});

  DemazureRootPairSet pairs;
  pairs.pairs.resize(2);
  for (std::size_t pos = 0; pos < 2; ++pos) {
    const std::size_t idx = tau.ray_indices[pos];
    if (sigma.rays()[idx] == p1) {
      pairs.pairs[pos] = RootPair{DemazureRoot{Vec{-1, 0, p.a1, p.b1}, idx},
                                  DemazureRoot{Vec{-1, 0, p.a2, p.b2}, idx}};
    } else {
      pairs.pairs[pos] = RootPair{DemazureRoot{Vec{0, -1, p.c1, p.d1}, idx},
                                  DemazureRoot{Vec{0, -1, p.c2, p.d2}, idx}};
    }
  }
  return RootMonoid::build(sigma, tau, pairs);
}

}  // namespace toric

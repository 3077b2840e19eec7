#include "toric/actions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace toric {

Point ambient_torus_action(const RootMonoid& X, const std::vector<Rat>& t, const Point& x) {
  if (t.size() != X.sigma().ambient_rank())
    throw std::invalid_argument("ambient_torus_action: one value per lattice coordinate required");
  for (const auto& c : t)
    if (c == 0) throw std::invalid_argument("ambient_torus_action: torus values must be nonzero");

  const Face& gamma = X.face_of(x);
  const auto& basis = X.face_basis(gamma);
  std::vector<Rat> values;
  for (std::size_t l = 0; l < basis.size(); ++l) {
    Rat f = 1;
    for (std::size_t i = 0; i < t.size(); ++i) f *= pow_rat(t[i], basis[l][i]);
    values.push_back(f * x.values[l]);
  }
  return Point{x.face_rays, std::move(values)};
}

Point ray_subtorus_action(const RootMonoid& X, const Vec& p, const Rat& t, const Point& x) {
  if (t == 0) throw std::invalid_argument("ray_subtorus_action: parameter must be nonzero");
  if (p != primitive(p)) throw std::invalid_argument("ray_subtorus_action: p must be primitive");
  const Face& gamma = X.face_of(x);
  const auto& basis = X.face_basis(gamma);
  std::vector<Rat> values;
  for (std::size_t l = 0; l < basis.size(); ++l) values.push_back(pow_rat(t, pairing(p, basis[l])) * x.values[l]);
  return Point{x.face_rays, std::move(values)};
}

Point root_subgroup_action(const RootMonoid& X, const DemazureRoot& e, const Rat& a, const Point& x) {
  if (!is_demazure_root(X.sigma(), e.vector))
    throw std::invalid_argument("root_subgroup_action: not a Demazure root of sigma");
  const Vec rho = X.sigma().rays().at(e.ray_index);
  const auto& gens = X.semigroup().generators;

  std::vector<Rat> values(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Int d = pairing(rho, gens[g]);
    Rat total = 0;
    Rat a_pow = 1;
    Vec u = gens[g];
    for (Int m = 0; m <= d; ++m) {
      if (m > 0) {
        a_pow *= a;
        u = add(u, e.vector);
      }
      if (a_pow != 0) total += Rat(binomial(d, m)) * a_pow * X.evaluate_local(x, u);
    }
    values[g] = total;
  }
  return X.point_from_generator_values(values);
}

std::vector<OrbitPair> he_connected_pairs(const Cone& sigma, const DemazureRoot& e) {
  if (is_demazure_root(sigma, e.vector) != std::optional<std::size_t>(e.ray_index))
    throw std::invalid_argument("he_connected_pairs: not a Demazure root with that distinguished ray");

  const auto all = faces(sigma);
  std::map<std::vector<std::size_t>, const Face*> by_rays;
  for (const auto& f : all) by_rays[f.ray_indices] = &f;

  std::vector<OrbitPair> pairs;
  for (const auto& gamma : all) {
    if (std::find(gamma.ray_indices.begin(), gamma.ray_indices.end(), e.ray_index) != gamma.ray_indices.end())
      continue;
    bool perp = true;
    for (auto i : gamma.ray_indices) perp &= (pairing(sigma.rays()[i], e.vector) == 0);
    if (!perp) continue;
    std::vector<std::size_t> grown = gamma.ray_indices;
    grown.insert(std::lower_bound(grown.begin(), grown.end(), e.ray_index), e.ray_index);
    const auto it = by_rays.find(grown);
    if (it == by_rays.end()) continue;
    pairs.push_back(OrbitPair{gamma, *it->second});
  }
  return pairs;
}

}  // namespace toric

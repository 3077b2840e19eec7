#include "toric/demazure.hpp"

#include <algorithm>
#include <set>

#include "toric/hilbert.hpp"

namespace toric {

std::string RootSetCheck::describe() const {
  if (compatible) return "compatible";
  std::string s = "incompatible:";
  for (const auto& [r, t, member] : kronecker_violations)
    s += " pair " + std::to_string(r) + " e" + std::to_string(member) + " fails Kronecker condition at face ray " +
         std::to_string(t) + ";";
  for (const auto& [r, member] : not_roots)
    s += " pair " + std::to_string(r) + " e" + std::to_string(member) + " is not a Demazure root;";
  return s;
}

std::optional<std::size_t> is_demazure_root(const Cone& sigma, const Vec& e) {
  std::optional<std::size_t> distinguished;
  for (std::size_t i = 0; i < sigma.rays().size(); ++i) {
    const Int s = pairing(sigma.rays()[i], e);
    if (s >= 0) continue;
    if (s != -1 || distinguished) return std::nullopt;
    distinguished = i;
  }
  return distinguished;
}

std::vector<DemazureRoot> enumerate_roots(const Cone& sigma, std::size_t ray_index, const Int& bound) {
  if (ray_index >= sigma.rays().size()) throw std::invalid_argument("enumerate_roots: bad ray index");
  const std::size_t n = sigma.ambient_rank();
  std::vector<DemazureRoot> out;
  Vec e(n, -bound);
  if (n == 0) return out;
  while (true) {
    const auto hit = is_demazure_root(sigma, e);
    if (hit && *hit == ray_index) out.push_back(DemazureRoot{e, ray_index});
    std::size_t i = n;
    while (i > 0) {
      --i;
      ++e[i];
      if (e[i] <= bound) break;
      e[i] = -bound;
      if (i == 0) return out;
    }
  }
}

RootSetCheck is_compatible_set(const Cone& sigma, const Face& tau, const DemazureRootPairSet& pairs) {
  RootSetCheck check;
  if (pairs.size() != tau.ray_indices.size()) {
    check.compatible = false;
    check.not_roots.emplace_back(pairs.size(), 0);  // size mismatch reported as a degenerate entry
    return check;
  }
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    const Vec* members[2] = {&pairs.pairs[r].e1.vector, &pairs.pairs[r].e2.vector};
    for (int m = 0; m < 2; ++m) {
      for (std::size_t s = 0; s < tau.ray_indices.size(); ++s) {
        const Int want = (r == s) ? -1 : 0;
        if (pairing(sigma.rays().at(tau.ray_indices[s]), *members[m]) != want) {
          check.compatible = false;
          check.kronecker_violations.emplace_back(r, s, m + 1);
        }
      }
      if (!is_demazure_root(sigma, *members[m])) {
        check.compatible = false;
        check.not_roots.emplace_back(r, m + 1);
      }
    }
  }
  return check;
}

namespace {

// Minimal max-norm integer solution of <p_s, u> = -delta_{rs}; ties broken by
// lexicographic order. Bounded search, exact.
Vec kronecker_solution(const std::vector<Vec>& face_rays, std::size_t r, std::size_t n) {
  for (Int m = 0; m <= 40; ++m) {
    Vec u(n, -m);
    while (true) {
      Int norm = 0;
      for (const auto& c : u) norm = std::max(norm, Int(boost::multiprecision::abs(c)));
      if (norm == m) {
        bool ok = true;
        for (std::size_t s = 0; s < face_rays.size() && ok; ++s)
          ok = pairing(face_rays[s], u) == (s == r ? -1 : 0);
        if (ok) return u;
      }
      std::size_t i = n;
      bool done = false;
      while (i > 0) {
        --i;
        ++u[i];
        if (u[i] <= m) break;
        u[i] = -m;
        if (i == 0) done = true;
      }
      if (done) break;
    }
  }
  throw std::logic_error("kronecker_solution: no small solution found (face not regular?)");
}

}  // namespace

DemazureRootPairSet compatible_pairs_with_differences(const Cone& sigma, const Face& tau,
                                                      const std::vector<Vec>& differences) {
  if (!is_regular_face(sigma, tau)) throw std::invalid_argument("compatible_pairs_with_differences: face not regular");
  if (differences.size() != tau.ray_indices.size())
    throw std::invalid_argument("compatible_pairs_with_differences: one difference per face ray required");

  const std::size_t n = sigma.ambient_rank();
  std::vector<Vec> face_rays;
  for (auto i : tau.ray_indices) face_rays.push_back(sigma.rays()[i]);
  for (const auto& c : differences)
    for (const auto& p : face_rays)
      if (pairing(p, c) != 0) throw std::invalid_argument("compatible_pairs_with_differences: difference not in tau-perp");

  const Cone sigma_dual = dual_cone(sigma);
  const Face tau_star = dual_face(sigma, sigma_dual, tau);
  const Vec v = relative_interior_point(sigma_dual, tau_star);
  const std::vector<Vec> w_gens = perp_semigroup(sigma, sigma_dual, tau);

  DemazureRootPairSet out;
  for (std::size_t r = 0; r < tau.ray_indices.size(); ++r) {
    const Vec u_r = kronecker_solution(face_rays, r, n);

    // Minimal N >= 0 pushing u_r into the root region.
    Int big_n = 0;
    for (std::size_t q = 0; q < sigma.rays().size(); ++q) {
      bool in_tau = false;
      for (auto i : tau.ray_indices) in_tau |= (i == q);
      if (in_tau) continue;
      const Int a = pairing(sigma.rays()[q], u_r);
      if (a >= 0) continue;
      const Int b = pairing(sigma.rays()[q], v);
      if (b <= 0) throw std::logic_error("compatible_pairs_with_differences: interior point fails positivity");
      Int need = (-a + b - 1) / b;  // ceil(-a / b)
      big_n = std::max(big_n, need);
    }
    const Vec base = add(u_r, scale(big_n, v));

    // Smallest shift w in tau* (by generator degree, then lex) making both
    // e1 = base + w and e2 = e1 - c_r roots.
    std::optional<std::pair<Vec, Vec>> found;
    std::set<Vec> layer{zero_vec(n)};
    for (int degree = 0; degree <= 200 && !found; ++degree) {
      for (const auto& w : layer) {
        const Vec e1 = add(base, w);
        const Vec e2 = sub(e1, differences[r]);
        const auto r1 = is_demazure_root(sigma, e1);
        const auto r2 = is_demazure_root(sigma, e2);
        if (r1 && r2 && *r1 == tau.ray_indices[r] && *r2 == tau.ray_indices[r]) {
          found = {e1, e2};
          break;
        }
      }
      if (found) break;
      std::set<Vec> next;
      for (const auto& w : layer)
        for (const auto& g : w_gens) next.insert(add(w, g));
      layer = std::move(next);
      if (layer.empty()) break;
    }
    if (!found)
      throw std::logic_error("compatible_pairs_with_differences: no root pair realizes the difference");
    out.pairs.push_back(RootPair{DemazureRoot{found->first, tau.ray_indices[r]},
                                 DemazureRoot{found->second, tau.ray_indices[r]}});
  }
  return out;
}

}  // namespace toric

#include "toric/center.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/idempotents.hpp"
#include "toric/rng.hpp"

namespace toric {

namespace {

Vec pairing_pattern(const RootMonoid& X, const Vec& u) {
  Vec d;
  for (auto idx : X.tau().ray_indices) d.push_back(pairing(X.sigma().rays()[idx], u));
  return d;
}

bool vanishing_condition(const RootMonoid& X, const Vec& u, bool active) {
  const Vec d = pairing_pattern(X, u);
  if (active) return !is_zero(d);
  // Non-active branch: <p-bar, u>(e2-bar - e1-bar) must be nonzero in M.
  Vec combo = zero_vec(X.sigma().ambient_rank());
  for (std::size_t r = 0; r < d.size(); ++r) combo = add(combo, scale(d[r], X.characters()[r]));
  return !is_zero(combo);
}

}  // namespace

CenterLocus center_equations(const RootMonoid& X, const Int& degree_bound) {
  if (degree_bound < 1)
    throw std::invalid_argument("center_equations: degree bound below the generator degree");

  CenterLocus locus;
  locus.index_bound = degree_bound;
  locus.active_branch = X.is_active();

  const auto& gens = X.semigroup().generators;
  for (const auto& u : gens)
    if (vanishing_condition(X, u, locus.active_branch)) locus.vanishing.push_back(u);

  // Index characters: semigroup elements with Kronecker pairing pattern
  // delta_{jr}, enumerated as generator words of length <= bound.
  std::set<Vec> layer{zero_vec(X.sigma().ambient_rank())};
  std::set<Vec> pool;
  for (Int d = 0; d < degree_bound; ++d) {
    std::set<Vec> next;
    for (const auto& w : layer)
      for (const auto& g : gens) next.insert(add(w, g));
    for (const auto& w : next) pool.insert(w);
    layer = std::move(next);
  }

  Vec grading = zero_vec(X.sigma().ambient_rank());
  for (const auto& p : X.sigma().rays()) grading = add(grading, p);

  // Pairs with a trivial character contribute no equality; the Kronecker
  // pattern constrains the nontrivial slots only, which in the active case
  // is every slot.
  const std::size_t k = X.unipotent_rank();
  std::vector<bool> nontrivial(k);
  for (std::size_t r = 0; r < k; ++r) nontrivial[r] = !is_zero(X.characters()[r]);

  for (std::size_t r = 0; r < k; ++r) {
    if (!nontrivial[r]) continue;
    std::vector<Vec> candidates;
    for (const auto& u : pool) {
      const Vec d = pairing_pattern(X, u);
      bool match = true;
      for (std::size_t j = 0; j < k && match; ++j)
        if (nontrivial[j]) match = (d[j] == (j == r ? 1 : 0));
      if (match) candidates.push_back(u);
    }
    std::sort(candidates.begin(), candidates.end(), [&](const Vec& a, const Vec& b) {
      const Int ga = pairing(grading, a), gb = pairing(grading, b);
      if (ga != gb) return ga < gb;
      return lex_less(a, b);
    });

    // Coset reduction: u' = u + w follows from u whenever w lies in the
    // semigroup and pairs to zero with the nontrivial face rays.
    std::vector<Vec> kept;
    for (const auto& u : candidates) {
      bool redundant = false;
      for (const auto& u0 : kept) {
        const Vec w = sub(u, u0);
        if (!X.sigma_dual().contains(w)) continue;
        const Vec d = pairing_pattern(X, w);
        bool flat = true;
        for (std::size_t j = 0; j < k && flat; ++j)
          if (nontrivial[j]) flat = (d[j] == 0);
        if (flat) {
          redundant = true;
          break;
        }
      }
      if (redundant) continue;
      kept.push_back(u);
      locus.equalities.push_back(CenterEquality{r, u, add(u, X.roots().pairs[r].e1.vector),
                                                add(u, X.roots().pairs[r].e2.vector)});
    }
  }
  return locus;
}

std::optional<GroupElement> central_witness(const RootMonoid& X, const Point& x, std::size_t samples,
                                            std::uint64_t seed) {
  const std::size_t k = X.unipotent_rank();
  Rng rng(seed);

  auto commutes = [&](const GroupElement& g) {
    const Point y = X.to_point(g);
    const Point conj = X.multiply(X.multiply(y, x), X.inverse(y));
    return conj == x;
  };

  for (std::size_t r = 0; r < k; ++r) {
    GroupElement g = X.group_identity();
    g.alpha[r] = 1;
    if (!commutes(g)) return g;
  }
  for (std::size_t s = 0; s < samples; ++s) {
    GroupElement g = X.group_identity();
    for (auto& a : g.alpha) a = rng.small_rat();
    for (auto& t : g.torus) t = rng.nonzero_rat();
    if (!commutes(g)) return g;
  }
  return std::nullopt;
}

bool is_central(const RootMonoid& X, const Point& x, std::size_t samples, std::uint64_t seed) {
  return !central_witness(X, x, samples, seed).has_value();
}

CenterReport center_cross_validate(const RootMonoid& X, std::size_t samples, std::uint64_t seed) {
  CenterReport report;
  Rng rng(seed);
  const CenterLocus locus = center_equations(X, 6);

  auto fail = [&](std::string msg) {
    report.passed = false;
    report.failures.push_back(std::move(msg));
  };

  // Faces whose orbits meet the vanishing conditions.
  std::vector<Face> carrier;
  for (const auto& f : X.all_faces()) {
    bool ok = true;
    for (const auto& u : locus.vanishing) {
      bool perp = true;
      for (auto i : f.ray_indices) perp &= (pairing(X.sigma().rays()[i], u) == 0);
      if (perp) {
        ok = false;  // chi^u would be nonzero on this orbit
        break;
      }
    }
    if (ok) carrier.push_back(f);
  }
  if (carrier.empty()) {
    fail("no orbit satisfies the vanishing conditions");
    return report;
  }

  auto on_locus = [&](const Point& p) {
    for (const auto& u : locus.vanishing)
      if (X.evaluate(p, u) != 0) return false;
    for (const auto& eq : locus.equalities)
      if (X.evaluate(p, eq.lhs) != X.evaluate(p, eq.rhs)) return false;
    return true;
  };

  for (std::size_t s = 0; s < samples; ++s) {
    const Face& gamma = carrier[s % carrier.size()];

    // Soundness: a point built on the locus commutes with every sample.
    std::vector<Vec> constraints;
    bool compatible = true;
    for (const auto& eq : locus.equalities) {
      bool lhs_in = true, rhs_in = true;
      for (auto i : gamma.ray_indices) {
        lhs_in &= (pairing(X.sigma().rays()[i], eq.lhs) == 0);
        rhs_in &= (pairing(X.sigma().rays()[i], eq.rhs) == 0);
      }
      if (lhs_in != rhs_in) compatible = false;
      if (lhs_in && rhs_in) constraints.push_back(sub(eq.lhs, eq.rhs));
    }
    if (compatible) {
      const Point p = sample_point_with_unit_constraints(X, gamma, constraints, rng);
      if (!on_locus(p)) {
        fail("constructed locus point fails its own equations");
        continue;
      }
      ++report.soundness_checked;
      if (!is_central(X, p, 8, rng.next_u64())) fail("locus point admits a non-commuting witness");
    }

    // Completeness at samples: an orbit point violating the system must be
    // detected by the commutation oracle.
    const Point q = sample_point_on_orbit(X, gamma, rng);
    if (on_locus(q)) {
      ++report.soundness_checked;
      if (!is_central(X, q, 8, rng.next_u64())) fail("locus point admits a non-commuting witness");
    } else {
      ++report.completeness_checked;
      if (!central_witness(X, q, 8, rng.next_u64()))
        fail("off-locus point commutes with every sampled witness");
    }
  }
  return report;
}

}  // namespace toric

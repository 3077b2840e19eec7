#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/monoid.hpp"
#include "toric/rng.hpp"

namespace toric {

enum class IdempotentCase { singleton, empty, positive };

/// The idempotents of one torus orbit. For the positive case the locus is
/// O_gamma cut out by chi^u = 1 over the listed equation characters; the
/// singleton case pins the distinguished point; empty orbits carry a
/// certificate naming the ray whose root pattern rules idempotents out.
struct IdempotentLocus {
  Face gamma;
  IdempotentCase tag = IdempotentCase::empty;
  std::vector<Vec> equations;
  std::optional<Point> witness;
  std::string certificate;
};

IdempotentLocus classify(const RootMonoid& X, const Face& gamma);

bool is_idempotent(const RootMonoid& X, const Point& x);

/// Faces cone(gamma, p_{i_1}, ..., p_{i_l}) over all subsets of the tau-rays
/// outside gamma; their loci exhaust the closure of E_gamma. Throws when
/// E_gamma is empty.
std::vector<Face> closure_faces(const RootMonoid& X, const Face& gamma);

/// For each tau-ray outside gamma, the member of the root pair lying in
/// gamma^perp (its partner does not). These generate the unipotent group
/// whose orbit through x_{cone(tau,gamma)} sweeps out the closure of
/// E_gamma. Throws when the exactly-one pattern is violated.
std::vector<DemazureRoot> h_gamma_roots(const RootMonoid& X, const Face& gamma);

struct OrbitStructureReport {
  bool passed = true;
  std::size_t torus_translates_checked = 0;
  std::size_t flow_points_checked = 0;
  std::size_t off_locus_checked = 0;
  std::vector<std::string> failures;
};

/// Sampled verification of the orbit structure of E_gamma: (a) torus
/// translates of x_gamma stay idempotent on the locus, (b) unipotent flows
/// from x_{cone(tau,gamma)} land exactly in the closure loci and are
/// idempotent, (c) sampled orbit points violating the equations are not
/// idempotent. Requires E_gamma nonempty.
OrbitStructureReport verify_orbit_structure(const RootMonoid& X, const Face& gamma, std::size_t samples,
                                            std::uint64_t seed);

/// Random point of O_gamma (free nonzero torus values).
Point sample_point_on_orbit(const RootMonoid& X, const Face& gamma, Rng& rng);

/// Random point of O_gamma satisfying chi^w = 1 for every listed w (each w
/// must lie in M ∩ gamma^perp). Sampled from the kernel parametrization of
/// the constraint exponents.
Point sample_point_with_unit_constraints(const RootMonoid& X, const Face& gamma,
                                         const std::vector<Vec>& constraints, Rng& rng);

/// Exact torus element of R_tau with (prod_r R_{p_r}(t_r)) x = y, if one
/// exists; values returned per tau ray. Solves the exponent system prime by
/// prime.
std::optional<std::vector<Rat>> connect_by_ray_subtori(const RootMonoid& X, const Point& x, const Point& y);

}  // namespace toric

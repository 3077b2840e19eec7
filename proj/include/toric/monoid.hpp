#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "toric/demazure.hpp"
#include "toric/hilbert.hpp"

namespace toric {

/// A point of the toric variety, i.e. a semigroup homomorphism S_sigma -> K,
/// stored as the face of its torus orbit plus exact nonzero values on the
/// monoid's canonical lattice basis of M ∩ gamma^perp. Zero values are
/// encoded by the face, never stored.
struct Point {
  std::vector<std::size_t> face_rays;  // sorted ray indices of the orbit face
  std::vector<Rat> values;

  bool operator==(const Point& o) const = default;
};

/// An element of the unit group written as alpha-bar times a torus element;
/// torus values live on the canonical basis of M(tau) = tau^perp ∩ M.
struct GroupElement {
  std::vector<Rat> alpha;
  std::vector<Rat> torus;

  bool operator==(const GroupElement& o) const = default;
};

/// A root monoid: the multiplication on X_sigma induced by the
/// comultiplication attached to a regular face and a compatible set of
/// Demazure root pairs. Immutable after build; all operations are pure.
class RootMonoid {
 public:
  static RootMonoid build(const Cone& sigma, const Face& tau, const DemazureRootPairSet& roots);

  const Cone& sigma() const { return sigma_; }
  const Cone& sigma_dual() const { return sigma_dual_; }
  const Face& tau() const { return tau_; }
  const DemazureRootPairSet& roots() const { return roots_; }
  const SemigroupBasis& semigroup() const { return semigroup_; }
  const std::vector<Vec>& characters() const { return characters_; }  // chi_r = e2 - e1
  const std::vector<Face>& all_faces() const { return faces_; }
  const Point& neutral() const { return neutral_; }
  std::size_t unipotent_rank() const { return roots_.size(); }  // k
  const Vec& tau_interior_functional() const { return u_prime_; }
  const std::vector<Vec>& tau_perp_basis() const { return tau_basis_; }

  const Face& face_of(const Point& x) const;
  const std::vector<Vec>& face_basis(const Face& gamma) const;

  Point distinguished_point(const Face& gamma) const;
  Point make_point(const Face& gamma, std::vector<Rat> values) const;

  /// chi^u(x) for u in S_sigma. Throws if u is outside sigma-dual.
  Rat evaluate(const Point& x, const Vec& u) const;

  /// chi^u(x) on the chart of x's orbit: legal iff u pairs nonnegatively with
  /// every ray of the orbit face (throws otherwise); zero iff some pairing is
  /// positive.
  Rat evaluate_local(const Point& x, const Vec& u) const;

  Point multiply(const Point& x, const Point& y) const;
  bool is_invertible(const Point& x) const;
  Point inverse(const Point& y) const;

  bool is_active() const;
  bool is_commutative() const;

  GroupElement group_identity() const;
  GroupElement group_multiply(const GroupElement& g, const GroupElement& h) const;
  Point to_point(const GroupElement& g) const;
  GroupElement from_point(const Point& x) const;

  /// Reassembles a Point from its values on the semigroup generators,
  /// inferring the orbit face from the support. Throws on a support pattern
  /// matching no face or values that are not multiplicative.
  Point point_from_generator_values(const std::vector<Rat>& values) const;

 private:
  RootMonoid() = default;

  struct FaceCtx {
    Face face;
    std::vector<Vec> basis;                       // lattice basis of M ∩ gamma^perp
    Smith basis_smith;                            // of the basis column matrix
    std::vector<std::optional<Vec>> gen_coords;   // per generator, coordinates if in gamma^perp
    std::vector<std::vector<std::pair<std::size_t, Int>>> basis_in_gens;  // basis vector as Z-combo of support generators
  };

  const FaceCtx& ctx_of(const std::vector<std::size_t>& face_rays) const;
  Rat eval_in_ctx(const FaceCtx& ctx, const std::vector<Rat>& values, const Vec& u) const;

  Cone sigma_;
  Cone sigma_dual_;
  Face tau_;
  DemazureRootPairSet roots_;
  SemigroupBasis semigroup_;
  std::vector<Vec> characters_;
  std::vector<Vec> tau_ray_vectors_;
  std::vector<Face> faces_;
  std::map<std::vector<std::size_t>, std::size_t> face_lookup_;
  std::vector<FaceCtx> ctx_;
  std::vector<Vec> tau_basis_;
  std::vector<Vec> chi_in_tau_basis_;
  Vec u_prime_;
  Point neutral_;
};

}  // namespace toric

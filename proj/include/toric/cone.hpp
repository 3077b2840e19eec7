#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "toric/smith.hpp"
#include "toric/vec.hpp"

namespace toric {

/// A strongly convex rational polyhedral cone, stored by its extreme rays.
///
/// The cone need not be full-dimensional. `facet_normals` cut out the cone
/// inside its linear span; `span_equations` is a lattice basis of the
/// annihilator of the span (empty for full-dimensional cones), so
///   v in cone  <=>  all span_equations vanish on v and all facet_normals
///                   pair nonnegatively with v.
/// Rays and normals are sorted lexicographically; rays keep their geometric
/// direction and are primitive.
class Cone {
 public:
  /// Builds the cone spanned by `generators`. Redundant generators are
  /// dropped, the rest reduced to the extreme rays. Throws if the generators
  /// span a line (the cone would not be strongly convex).
  static Cone from_generators(std::size_t rank, const std::vector<Vec>& generators);

  std::size_t ambient_rank() const { return rank_; }
  std::size_t dim() const { return dim_; }
  bool is_full_dimensional() const { return dim_ == rank_; }

  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Vec>& facet_normals() const { return normals_; }
  const std::vector<Vec>& span_equations() const { return span_equations_; }

  bool contains(const Vec& v) const;

   bool operator==(const Cone& o) const { return rank_ == o.rank_ && rays_ == o.rays_; }

  /// The zero cone in the zero lattice; placeholder until assigned.
  Cone() = default;

 private:
  std::size_t rank_ = 0;
  std::size_t dim_ = 0;
  std::vector<Vec> rays_;
  std::vector<Vec> normals_;
  std::vector<Vec> span_equations_;
};

/// A face of a cone, recorded by the indices of the parent rays it contains
/// together with a certifying supporting functional: the functional vanishes
/// on the indexed rays and is strictly positive on every other parent ray.
struct Face {
  std::vector<std::size_t> ray_indices;  // sorted
  Vec functional;
};

/// Extreme rays of {u : <c, u> >= 0 for all c in constraints}; requires the
/// constraints to span the ambient space, so the result is pointed.
std::vector<Vec> dual_rays(const std::vector<Vec>& constraints, std::size_t rank);

/// The dual cone. Requires sigma full-dimensional (otherwise the dual
/// contains a line and is not representable here).
Cone dual_cone(const Cone& sigma);

/// All faces of sigma, including the zero face and sigma itself, sorted by
/// (dimension, ray indices).
std::vector<Face> faces(const Cone& sigma);

/// Checks the supporting-functional certificate of `face` against sigma.
bool is_face_of(const Cone& sigma, const Face& face);

std::optional<Face> face_from_rays(const Cone& sigma, std::vector<std::size_t> ray_indices);

std::size_t face_dim(const Cone& sigma, const Face& face);

/// Face spanned by the rays of sigma orthogonal to every ray of gamma, as a
/// face of the dual cone. gamma must be a face of sigma.
Face dual_face(const Cone& sigma, const Cone& sigma_dual, const Face& gamma);

/// True iff the primitive ray vectors of the face extend to a basis of the
/// lattice (all Smith invariant factors equal 1). Throws if the face does not
/// belong to sigma.
bool is_regular_face(const Cone& sigma, const Face& face);

/// A lattice point in the relative interior of a face of `cone` (sum of the
/// face's ray generators; the zero vector for the zero face).
Vec relative_interior_point(const Cone& cone, const Face& face);

/// Exact integer coefficients of u in the given independent lattice vectors,
/// if u lies in the lattice they generate.
std::optional<Vec> decompose_in_sublattice(const Vec& u, const std::vector<Vec>& basis);

/// Lattice basis of the annihilator sublattice {u in M : <p, u> = 0 for all
/// rays p of the face}.
std::vector<Vec> perp_lattice_basis(const Cone& sigma, const Face& face);

}  // namespace toric

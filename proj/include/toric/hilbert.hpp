#pragma once

#include <stdexcept>
#include <vector>

#include "toric/cone.hpp"

namespace toric {

/// Generators of the semigroup of lattice points of a cone. `certified` is
/// true when the generators were proven to be the minimal generating set
/// (Hilbert basis); false when only the bounded fallback search ran.
struct SemigroupBasis {
  std::vector<Vec> generators;
  bool certified = true;
};

/// Raised when the bounded fallback enumeration cannot certify a result
/// within its box.
struct HilbertOverflow : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Hilbert basis of cone ∩ M for a full-dimensional pointed cone, computed by
/// triangulating into simplicial cones and reducing the lattice points of the
/// fundamental parallelepipeds to irreducibles. Falls back to a bounded box
/// enumeration (max-norm <= box_bound, certified=false) when a parallelepiped
/// is too large to enumerate.
SemigroupBasis hilbert_basis(const Cone& cone, const Int& box_bound = 6);

/// The bounded fallback alone: generators irreducible within the cone among
/// the lattice points of max-norm <= box_bound. Never certified.
SemigroupBasis hilbert_basis_boxed(const Cone& cone, const Int& box_bound);

/// Generators of the semigroup gamma^perp ∩ S_sigma, where S_sigma is the
/// semigroup of sigma_dual. The group they generate is the full sublattice
/// M ∩ gamma^perp.
std::vector<Vec> perp_semigroup(const Cone& sigma, const Cone& sigma_dual, const Face& gamma);

/// Decomposition of the cone into full-dimensional simplicial subcones,
/// each given by a subset of the extreme rays.
std::vector<std::vector<Vec>> triangulate(const Cone& cone);

}  // namespace toric

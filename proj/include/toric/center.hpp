#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toric/monoid.hpp"

namespace toric {

/// One defining equality chi^{u+e1^(r)} = chi^{u+e2^(r)} of the center, for a
/// character u with the Kronecker pairing pattern of pair r.
struct CenterEquality {
  std::size_t r;
  Vec u;
  Vec lhs;  // u + e1^(r)
  Vec rhs;  // u + e2^(r)
};

/// Defining equations of the center inside X: vanishing characters plus
/// root-pair equalities over a degree-bounded, coset-reduced index set.
struct CenterLocus {
  std::vector<Vec> vanishing;
  std::vector<CenterEquality> equalities;
  Int index_bound;
  bool active_branch = true;
};

/// The center equations. For an active monoid the vanishing part cuts out
/// the closure of O_tau; otherwise the enlarged non-active variant is used.
/// `degree_bound` bounds the semigroup word length of the index characters;
/// must be at least 1 (the degree of a generator).
CenterLocus center_equations(const RootMonoid& X, const Int& degree_bound);

/// Commutation oracle: conjugates x by sampled invertible elements, pure
/// unipotent one-hots first, then random mixed ones. Exact equality.
bool is_central(const RootMonoid& X, const Point& x, std::size_t samples, std::uint64_t seed);

/// Same oracle, returning the first non-commuting witness found.
std::optional<GroupElement> central_witness(const RootMonoid& X, const Point& x, std::size_t samples,
                                            std::uint64_t seed);

struct CenterReport {
  bool passed = true;
  std::size_t soundness_checked = 0;
  std::size_t completeness_checked = 0;
  std::vector<std::string> failures;
};

/// Two-way sampled validation of the equations: locus points must commute
/// with everything sampled; points violating the system must admit a
/// non-commuting witness.
CenterReport center_cross_validate(const RootMonoid& X, std::size_t samples, std::uint64_t seed);

}  // namespace toric

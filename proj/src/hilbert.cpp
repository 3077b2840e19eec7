#include "toric/hilbert.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toric {

namespace {

constexpr long kParallelepipedCap = 500000;

Mat cols_from(const std::vector<Vec>& vs, std::size_t rank) {
  Mat m(rank, zero_vec(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) m[i][j] = vs[j][i];
  return m;
}

Mat inverse_unimodular(const Mat& a) {
  const std::size_t n = row_count(a);
  Mat inv(n, zero_vec(n));
  for (std::size_t j = 0; j < n; ++j) {
    Vec e = zero_vec(n);
    e[j] = 1;
    const auto col = solve_integer(a, e);
    if (!col) throw std::logic_error("inverse_unimodular: matrix not unimodular");
    for (std::size_t i = 0; i < n; ++i) inv[i][j] = (*col)[i];
  }
  return inv;
}

Int floor_rat(const Rat& r) {
  const Int num = boost::multiprecision::numerator(r);
  const Int den = boost::multiprecision::denominator(r);
  Int q = num / den;
  if (num % den != 0 && num < 0) --q;
  return q;
}

// Lattice points of the half-open parallelepiped spanned by the columns of
// the simplicial ray matrix. Empty result signals the cap was exceeded.
bool parallelepiped_points(const std::vector<Vec>& simplex_rays, std::set<Vec>& out) {
  const std::size_t n = simplex_rays[0].size();
  const Mat w = cols_from(simplex_rays, n);
  const Smith s = smith_form(w);
  Int det = 1;
  for (std::size_t i = 0; i < n; ++i) det *= s.d[i][i];
  if (det == 0) throw std::logic_error("parallelepiped_points: degenerate simplex");
  if (det > kParallelepipedCap) return false;

  const Mat left_inv = inverse_unimodular(s.left);

  // Coset representatives of Z^n / W Z^n are left^{-1} c with c in prod [0, d_i).
  Vec counter = zero_vec(n);
  while (true) {
    Vec rep = mat_apply(left_inv, counter);
    // Reduce the representative into the fundamental parallelepiped.
    const auto t = solve_rational(w, rep);
    if (!t) throw std::logic_error("parallelepiped_points: unsolvable simplex system");
    for (std::size_t i = 0; i < n; ++i) {
      const Int f = floor_rat((*t)[i]);
      if (f != 0) rep = sub(rep, scale(f, simplex_rays[i]));
    }
    out.insert(rep);

    std::size_t i = 0;
    while (i < n) {
      ++counter[i];
      if (counter[i] < s.d[i][i]) break;
      counter[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  return true;
}

std::vector<Vec> reduce_to_irreducibles(const Cone& cone, const std::set<Vec>& candidates) {
  Vec grading = zero_vec(cone.ambient_rank());
  for (const auto& h : cone.facet_normals()) grading = add(grading, h);

  std::vector<Vec> sorted(candidates.begin(), candidates.end());
  std::erase_if(sorted, [](const Vec& v) { return is_zero(v); });
  std::stable_sort(sorted.begin(), sorted.end(), [&](const Vec& a, const Vec& b) {
    const Int da = pairing(grading, a), db = pairing(grading, b);
    if (da != db) return da < db;
    return lex_less(a, b);
  });

  std::vector<Vec> basis;
  for (const auto& x : sorted) {
    bool reducible = false;
    for (const auto& y : basis) {
      const Vec diff = sub(x, y);
      if (!is_zero(diff) && cone.contains(diff)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) basis.push_back(x);
  }
  std::sort(basis.begin(), basis.end(), lex_less);
  return basis;
}

}  // namespace

SemigroupBasis hilbert_basis_boxed(const Cone& cone, const Int& box_bound) {
  const std::size_t n = cone.ambient_rank();
  if (box_bound < 1) throw HilbertOverflow("hilbert_basis: fallback box bound too small");
  Rat cells = 1;
  for (std::size_t i = 0; i < n; ++i) cells *= Rat(2 * box_bound + 1);
  if (cells > Rat(20000000)) throw HilbertOverflow("hilbert_basis: fallback box too large to enumerate");

  std::set<Vec> candidates;
  Vec v(n, -box_bound);
  while (true) {
    if (cone.contains(v)) candidates.insert(v);
    std::size_t i = 0;
    while (i < n) {
      ++v[i];
      if (v[i] <= box_bound) break;
      v[i] = -box_bound;
      ++i;
    }
    if (i == n) break;
  }
  return SemigroupBasis{reduce_to_irreducibles(cone, candidates), false};
}

std::vector<std::vector<Vec>> triangulate(const Cone& cone) {
  if (cone.rays().size() == cone.dim()) return {cone.rays()};
  const Vec apex = cone.rays().front();  // rays are sorted, choice is stable

  std::vector<std::vector<Vec>> simplices;
  for (const auto& f : faces(cone)) {
    if (face_dim(cone, f) + 1 != cone.dim()) continue;
    bool has_apex = false;
    std::vector<Vec> facet_rays;
    for (auto i : f.ray_indices) {
      if (cone.rays()[i] == apex) has_apex = true;
      facet_rays.push_back(cone.rays()[i]);
    }
    if (has_apex) continue;
    const Cone facet = Cone::from_generators(cone.ambient_rank(), facet_rays);
    for (auto s : triangulate(facet)) {
      s.insert(s.begin(), apex);
      simplices.push_back(std::move(s));
    }
  }
  return simplices;
}

SemigroupBasis hilbert_basis(const Cone& cone, const Int& box_bound) {
  if (!cone.is_full_dimensional())
    throw std::invalid_argument("hilbert_basis: cone must be full-dimensional");
  if (cone.ambient_rank() == 0) return SemigroupBasis{{}, true};

  std::set<Vec> candidates;
  for (const auto& r : cone.rays()) candidates.insert(r);
  for (const auto& simplex : triangulate(cone)) {
    if (!parallelepiped_points(simplex, candidates)) return hilbert_basis_boxed(cone, box_bound);
  }
  return SemigroupBasis{reduce_to_irreducibles(cone, candidates), true};
}

std::vector<Vec> perp_semigroup(const Cone& sigma, const Cone& sigma_dual, const Face& gamma) {
  if (!is_face_of(sigma, gamma)) throw std::invalid_argument("perp_semigroup: not a face");
  const Face star = dual_face(sigma, sigma_dual, gamma);
  if (star.ray_indices.empty()) return {};

  const std::vector<Vec> basis = perp_lattice_basis(sigma, gamma);
  const std::size_t d = basis.size();
  const Mat basis_cols = cols_from(basis, sigma.ambient_rank());
  const Smith bs = smith_form(basis_cols);

  std::vector<Vec> local_rays;
  for (auto j : star.ray_indices) {
    const auto c = solve_integer(bs, d, sigma_dual.rays().at(j));
    if (!c) throw std::logic_error("perp_semigroup: dual face ray escapes the perp lattice");
    local_rays.push_back(*c);
  }
  const Cone local = Cone::from_generators(d, local_rays);
  const SemigroupBasis hb = hilbert_basis(local);

  std::vector<Vec> out;
  for (const auto& g : hb.generators) out.push_back(mat_apply(basis_cols, g));
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace toric

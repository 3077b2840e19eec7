#include "toric/cone.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace toric {

namespace {

Mat rows_from(const std::vector<Vec>& vs) { return Mat(vs.begin(), vs.end()); }

Mat cols_from(const std::vector<Vec>& vs, std::size_t rank) {
  Mat m(rank, zero_vec(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) m[i][j] = vs[j][i];
  return m;
}

// Enumerates subsets of size k in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Vec> dual_rays(const std::vector<Vec>& constraints, std::size_t rank) {
  if (rank == 0) return {};
  if (mat_rank(rows_from(constraints)) != rank)
    throw std::invalid_argument("dual_rays: constraints do not span; dual cone has a line");

  std::set<Vec> found;
  for_each_subset(constraints.size(), rank - 1, [&](const std::vector<std::size_t>& idx) {
    Mat sub;
    for (auto i : idx) sub.push_back(constraints[i]);
    const auto kernel = integer_kernel(sub, rank);
    if (kernel.size() != 1) return;
    Vec u = kernel[0];
    bool ok_pos = true, ok_neg = true;
    for (const auto& c : constraints) {
      const Int s = pairing(c, u);
      if (s < 0) ok_pos = false;
      if (s > 0) ok_neg = false;
      if (!ok_pos && !ok_neg) return;
    }
    found.insert(ok_pos ? u : negate(u));
  });
  std::vector<Vec> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

Cone Cone::from_generators(std::size_t rank, const std::vector<Vec>& generators) {
  Cone cone;
  cone.rank_ = rank;

  std::set<Vec> primitives;
  for (const auto& g : generators) {
    if (g.size() != rank) throw std::invalid_argument("Cone: generator rank mismatch");
    if (!is_zero(g)) primitives.insert(primitive(g));
  }
  std::vector<Vec> gens(primitives.begin(), primitives.end());

  if (gens.empty()) {
    cone.dim_ = 0;
    for (std::size_t j = 0; j < rank; ++j) {
      Vec e = zero_vec(rank);
      e[j] = 1;
      cone.span_equations_.push_back(e);
    }
    return cone;
  }

  // Saturated lattice basis of the span: double kernel.
  cone.span_equations_ = integer_kernel(rows_from(gens), rank);
  const std::vector<Vec> span_basis = integer_kernel(rows_from(cone.span_equations_), rank);
  const std::size_t d = span_basis.size();
  cone.dim_ = d;

  const bool full = (d == rank);
  const Mat basis_rows = rows_from(span_basis);  // d x n
  const Mat basis_cols = cols_from(span_basis, rank);
  const Smith basis_smith = full ? Smith{} : smith_form(basis_cols);

  // Generator coordinates inside the span.
  std::vector<Vec> coords;
  for (const auto& g : gens) {
    if (full) {
      coords.push_back(g);
    } else {
      auto c = solve_integer(basis_smith, d, g);
      if (!c) throw std::logic_error("Cone: generator escapes the saturated span");
      coords.push_back(*c);
    }
  }

  // Facet normals (inside the span) are the extreme rays of the dual there.
  const std::vector<Vec> normals_local = dual_rays(coords, d);
  if (mat_rank(rows_from(normals_local)) != d)
    throw std::invalid_argument("Cone: generators span a line; cone is not strongly convex");

  // Extreme rays of the cone = dual of the dual.
  const std::vector<Vec> rays_local = dual_rays(normals_local, d);

  if (full) {
    cone.rays_ = rays_local;
    cone.normals_ = normals_local;
  } else {
    const Smith basis_rows_smith = smith_form(basis_rows);
    for (const auto& r : rays_local) cone.rays_.push_back(mat_apply(basis_cols, r));
    for (const auto& h : normals_local) {
      auto lifted = solve_integer(basis_rows_smith, rank, h);
      if (!lifted) throw std::logic_error("Cone: facet normal does not lift");
      cone.normals_.push_back(*lifted);
    }
    std::sort(cone.rays_.begin(), cone.rays_.end(), lex_less);
    std::sort(cone.normals_.begin(), cone.normals_.end(), lex_less);
  }
  return cone;
}

bool Cone::contains(const Vec& v) const {
  if (v.size() != rank_) throw std::invalid_argument("contains: rank mismatch");
  for (const auto& eq : span_equations_)
    if (pairing(v, eq) != 0) return false;
  for (const auto& h : normals_)
    if (pairing(v, h) < 0) return false;
  return true;
}

Cone dual_cone(const Cone& sigma) {
  if (!sigma.is_full_dimensional())
    throw std::invalid_argument("dual_cone: cone must be full-dimensional");
  return Cone::from_generators(sigma.ambient_rank(), dual_rays(sigma.rays(), sigma.ambient_rank()));
}

std::vector<Face> faces(const Cone& sigma) {
  const auto& rays = sigma.rays();
  std::map<std::vector<std::size_t>, Face> seen;

  std::vector<std::size_t> all(rays.size());
  for (std::size_t i = 0; i < rays.size(); ++i) all[i] = i;
  Face top{all, zero_vec(sigma.ambient_rank())};
  seen.emplace(top.ray_indices, top);

  std::deque<Face> queue{top};
  while (!queue.empty()) {
    const Face f = queue.front();
    queue.pop_front();
    for (const auto& h : sigma.facet_normals()) {
      std::vector<std::size_t> cut;
      for (auto i : f.ray_indices)
        if (pairing(rays[i], h) == 0) cut.push_back(i);
      if (cut == f.ray_indices) continue;
      if (seen.count(cut)) continue;
      Face g{cut, add(f.functional, h)};
      seen.emplace(g.ray_indices, g);
      queue.push_back(g);
    }
  }

  std::vector<Face> out;
  for (auto& [key, f] : seen) out.push_back(f);
  std::stable_sort(out.begin(), out.end(), [&](const Face& a, const Face& b) {
    const std::size_t da = face_dim(sigma, a), db = face_dim(sigma, b);
    if (da != db) return da < db;
    return a.ray_indices < b.ray_indices;
  });
  return out;
}

bool is_face_of(const Cone& sigma, const Face& face) {
  const auto& rays = sigma.rays();
  std::set<std::size_t> in(face.ray_indices.begin(), face.ray_indices.end());
  for (auto i : face.ray_indices) {
    if (i >= rays.size()) return false;
    if (pairing(rays[i], face.functional) != 0) return false;
  }
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (in.count(i)) continue;
    if (pairing(rays[i], face.functional) <= 0) return false;
  }
  return true;
}

std::optional<Face> face_from_rays(const Cone& sigma, std::vector<std::size_t> ray_indices) {
  std::sort(ray_indices.begin(), ray_indices.end());
  ray_indices.erase(std::unique(ray_indices.begin(), ray_indices.end()), ray_indices.end());
  for (const auto& f : faces(sigma))
    if (f.ray_indices == ray_indices) return f;
  return std::nullopt;
}

std::size_t face_dim(const Cone& sigma, const Face& face) {
  Mat m;
  for (auto i : face.ray_indices) m.push_back(sigma.rays().at(i));
  return m.empty() ? 0 : mat_rank(m);
}

Face dual_face(const Cone& sigma, const Cone& sigma_dual, const Face& gamma) {
  std::vector<std::size_t> idx;
  for (std::size_t j = 0; j < sigma_dual.rays().size(); ++j) {
    bool perp = true;
    for (auto i : gamma.ray_indices)
      if (pairing(sigma.rays().at(i), sigma_dual.rays()[j]) != 0) {
        perp = false;
        break;
      }
    if (perp) idx.push_back(j);
  }
  Vec functional = zero_vec(sigma.ambient_rank());
  for (auto i : gamma.ray_indices) functional = add(functional, sigma.rays().at(i));
  return Face{idx, functional};
}

bool is_regular_face(const Cone& sigma, const Face& face) {
  if (!is_face_of(sigma, face)) throw std::invalid_argument("is_regular_face: not a face of the cone");
  if (face.ray_indices.empty()) return true;
  Mat m;
  for (auto i : face.ray_indices) m.push_back(sigma.rays().at(i));
  const Smith s = smith_form(m);
  if (s.rank != face.ray_indices.size()) return false;
  for (std::size_t i = 0; i < s.rank; ++i)
    if (s.d[i][i] != 1) return false;
  return true;
}

Vec relative_interior_point(const Cone& cone, const Face& face) {
  if (!is_face_of(cone, face)) throw std::invalid_argument("relative_interior_point: not a face");
  Vec u = zero_vec(cone.ambient_rank());
  for (auto i : face.ray_indices) u = add(u, cone.rays().at(i));
  return u;
}

std::optional<Vec> decompose_in_sublattice(const Vec& u, const std::vector<Vec>& basis) {
  if (basis.empty()) return is_zero(u) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve_integer(cols_from(basis, u.size()), u);
}

std::vector<Vec> perp_lattice_basis(const Cone& sigma, const Face& face) {
  Mat rows;
  for (auto i : face.ray_indices) rows.push_back(sigma.rays().at(i));
  return integer_kernel(rows, sigma.ambient_rank());
}

}  // namespace toric

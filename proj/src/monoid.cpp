#include "toric/monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace toric {

namespace {

Mat cols_from(const std::vector<Vec>& vs, std::size_t rank) {
  Mat m(rank, zero_vec(vs.size()));
  for (std::size_t j = 0; j < vs.size(); ++j)
    for (std::size_t i = 0; i < rank; ++i) m[i][j] = vs[j][i];
  return m;
}

}  // namespace

RootMonoid RootMonoid::build(const Cone& sigma, const Face& tau, const DemazureRootPairSet& roots) {
  if (!sigma.is_full_dimensional())
    throw std::invalid_argument("RootMonoid: sigma must be full-dimensional");
  if (!is_regular_face(sigma, tau)) throw std::invalid_argument("RootMonoid: tau is not a regular face");
  const RootSetCheck check = is_compatible_set(sigma, tau, roots);
  if (!check.compatible) throw std::invalid_argument("RootMonoid: " + check.describe());

  RootMonoid m;
  m.sigma_ = sigma;
  m.sigma_dual_ = dual_cone(sigma);
  m.tau_ = tau;
  m.roots_ = roots;
  m.semigroup_ = hilbert_basis(m.sigma_dual_);
  for (std::size_t r = 0; r < roots.size(); ++r) m.characters_.push_back(roots.difference(r));
  for (auto i : tau.ray_indices) m.tau_ray_vectors_.push_back(sigma.rays()[i]);
  m.faces_ = faces(sigma);

  const auto& gens = m.semigroup_.generators;
  for (std::size_t f = 0; f < m.faces_.size(); ++f) {
    FaceCtx ctx;
    ctx.face = m.faces_[f];
    ctx.basis = perp_lattice_basis(sigma, ctx.face);
    ctx.basis_smith = smith_form(cols_from(ctx.basis, sigma.ambient_rank()));

    std::vector<Vec> support_gens;
    std::vector<std::size_t> support_idx;
    for (std::size_t g = 0; g < gens.size(); ++g) {
      bool perp = true;
      for (auto i : ctx.face.ray_indices) perp &= (pairing(sigma.rays()[i], gens[g]) == 0);
      if (perp) {
        ctx.gen_coords.push_back(solve_integer(ctx.basis_smith, ctx.basis.size(), gens[g]));
        if (!ctx.gen_coords.back()) throw std::logic_error("RootMonoid: generator escapes face lattice");
        support_gens.push_back(gens[g]);
        support_idx.push_back(g);
      } else {
        ctx.gen_coords.push_back(std::nullopt);
      }
    }

    // Each basis vector of M ∩ gamma^perp as an integer combination of the
    // generators supported on the face; the support generates that lattice.
    const Mat support_cols = cols_from(support_gens, sigma.ambient_rank());
    const Smith support_smith = support_gens.empty() ? Smith{} : smith_form(support_cols);
    for (const auto& b : ctx.basis) {
      std::optional<Vec> combo =
          support_gens.empty() ? std::optional<Vec>(std::nullopt)
                               : solve_integer(support_smith, support_gens.size(), b);
      if (!combo) throw std::logic_error("RootMonoid: face lattice not generated by supported generators");
      std::vector<std::pair<std::size_t, Int>> sparse;
      for (std::size_t j = 0; j < combo->size(); ++j)
        if ((*combo)[j] != 0) sparse.emplace_back(support_idx[j], (*combo)[j]);
      ctx.basis_in_gens.push_back(std::move(sparse));
    }

    m.face_lookup_[ctx.face.ray_indices] = f;
    m.ctx_.push_back(std::move(ctx));
  }

  m.tau_basis_ = m.ctx_[m.face_lookup_.at(tau.ray_indices)].basis;
  const Mat tau_cols = cols_from(m.tau_basis_, sigma.ambient_rank());
  const Smith tau_smith = smith_form(tau_cols);
  for (const auto& chi : m.characters_) {
    const auto c = solve_integer(tau_smith, m.tau_basis_.size(), chi);
    if (!c) throw std::logic_error("RootMonoid: character not in tau-perp lattice");
    m.chi_in_tau_basis_.push_back(*c);
  }
  m.u_prime_ = relative_interior_point(m.sigma_dual_, dual_face(sigma, m.sigma_dual_, tau));
  m.neutral_ = m.distinguished_point(tau);
  return m;
}

const RootMonoid::FaceCtx& RootMonoid::ctx_of(const std::vector<std::size_t>& face_rays) const {
  const auto it = face_lookup_.find(face_rays);
  if (it == face_lookup_.end()) throw std::invalid_argument("RootMonoid: unknown orbit face");
  return ctx_[it->second];
}

const Face& RootMonoid::face_of(const Point& x) const { return ctx_of(x.face_rays).face; }

const std::vector<Vec>& RootMonoid::face_basis(const Face& gamma) const {
  return ctx_of(gamma.ray_indices).basis;
}

Point RootMonoid::distinguished_point(const Face& gamma) const {
  const FaceCtx& ctx = ctx_of(gamma.ray_indices);
  return Point{gamma.ray_indices, std::vector<Rat>(ctx.basis.size(), Rat(1))};
}

Point RootMonoid::make_point(const Face& gamma, std::vector<Rat> values) const {
  const FaceCtx& ctx = ctx_of(gamma.ray_indices);
  if (values.size() != ctx.basis.size())
    throw std::invalid_argument("make_point: expected one value per basis vector of the face lattice");
  for (const auto& v : values)
    if (v == 0) throw std::invalid_argument("make_point: torus values must be nonzero");
  return Point{gamma.ray_indices, std::move(values)};
}

Rat RootMonoid::eval_in_ctx(const FaceCtx& ctx, const std::vector<Rat>& values, const Vec& u) const {
  bool in_perp = true;
  for (auto i : ctx.face.ray_indices) {
    const Int s = pairing(sigma_.rays()[i], u);
    if (s < 0) throw std::domain_error("evaluate: character not regular on this chart");
    if (s > 0) in_perp = false;
  }
  if (!in_perp) return 0;
  const auto coeffs = solve_integer(ctx.basis_smith, ctx.basis.size(), u);
  if (!coeffs) throw std::logic_error("evaluate: character escapes the face lattice");
  Rat r = 1;
  for (std::size_t l = 0; l < coeffs->size(); ++l) r *= pow_rat(values[l], (*coeffs)[l]);
  return r;
}

Rat RootMonoid::evaluate(const Point& x, const Vec& u) const {
  if (!sigma_dual_.contains(u)) throw std::invalid_argument("evaluate: u is not in the semigroup of sigma");
  return eval_in_ctx(ctx_of(x.face_rays), x.values, u);
}

Rat RootMonoid::evaluate_local(const Point& x, const Vec& u) const {
  return eval_in_ctx(ctx_of(x.face_rays), x.values, u);
}

Point RootMonoid::multiply(const Point& x, const Point& y) const {
  const std::size_t k = roots_.size();
  const FaceCtx& cx = ctx_of(x.face_rays);
  const FaceCtx& cy = ctx_of(y.face_rays);
  const auto& gens = semigroup_.generators;

  std::vector<Rat> values(gens.size(), Rat(0));
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Vec& u = gens[g];
    std::vector<Int> degree(k);
    for (std::size_t r = 0; r < k; ++r) degree[r] = pairing(tau_ray_vectors_[r], u);

    // Sum over the box 0 <= i_r <= <p_r, u> of the expanded comultiplication.
    std::vector<Int> i(k, 0);
    Rat total = 0;
    while (true) {
      Int coef = 1;
      Vec ux = u, uy = u;
      for (std::size_t r = 0; r < k; ++r) {
        coef *= binomial(degree[r], i[r]);
        if (i[r] != 0) ux = add(ux, scale(i[r], roots_.pairs[r].e2.vector));
        const Int j = degree[r] - i[r];
        if (j != 0) uy = add(uy, scale(j, roots_.pairs[r].e1.vector));
      }
      const Rat fx = eval_in_ctx(cx, x.values, ux);
      if (fx != 0) {
        const Rat fy = eval_in_ctx(cy, y.values, uy);
        if (fy != 0) total += Rat(coef) * fx * fy;
      }
      std::size_t r = 0;
      while (r < k) {
        ++i[r];
        if (i[r] <= degree[r]) break;
        i[r] = 0;
        ++r;
      }
      if (r == k) break;
    }
    values[g] = total;
  }
  return point_from_generator_values(values);
}

Point RootMonoid::point_from_generator_values(const std::vector<Rat>& values) const {
  const auto& gens = semigroup_.generators;
  if (values.size() != gens.size())
    throw std::invalid_argument("point_from_generator_values: one value per generator required");

  const FaceCtx* match = nullptr;
  for (const auto& ctx : ctx_) {
    bool ok = true;
    for (std::size_t g = 0; g < gens.size() && ok; ++g)
      ok = (values[g] != 0) == ctx.gen_coords[g].has_value();
    if (ok) {
      match = &ctx;
      break;
    }
  }
  if (!match)
    throw std::logic_error("point_from_generator_values: support pattern matches no orbit face");

  std::vector<Rat> basis_values;
  for (const auto& combo : match->basis_in_gens) {
    Rat v = 1;
    for (const auto& [g, e] : combo) v *= pow_rat(values[g], e);
    basis_values.push_back(v);
  }
  Point z{match->face.ray_indices, std::move(basis_values)};

  // The generator values of a point of X are multiplicative over relations;
  // anything else signals a bug upstream.
  for (std::size_t g = 0; g < gens.size(); ++g)
    if (eval_in_ctx(*match, z.values, gens[g]) != values[g])
      throw std::logic_error("point_from_generator_values: values are not multiplicative");
  return z;
}

bool RootMonoid::is_invertible(const Point& x) const {
  return std::includes(tau_.ray_indices.begin(), tau_.ray_indices.end(), x.face_rays.begin(),
                       x.face_rays.end());
}

Point RootMonoid::inverse(const Point& y) const {
  if (!is_invertible(y)) throw std::domain_error("inverse: point is not invertible");
  const FaceCtx& cy = ctx_of(y.face_rays);
  const std::size_t k = roots_.size();
  const auto& gens = semigroup_.generators;

  std::vector<Rat> values(gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g) {
    const Vec& u = gens[g];
    Vec w = negate(u);
    Int parity = 0;
    for (std::size_t r = 0; r < k; ++r) {
      const Int d = pairing(tau_ray_vectors_[r], u);
      if (d == 0) continue;
      parity += d;
      w = sub(w, scale(d, add(roots_.pairs[r].e1.vector, roots_.pairs[r].e2.vector)));
    }
    const Rat v = eval_in_ctx(cy, y.values, w);
    values[g] = (parity % 2 == 0) ? v : -v;
  }
  return point_from_generator_values(values);
}

bool RootMonoid::is_active() const {
  const std::size_t k = roots_.size();
  if (k == 0) return true;
  Mat m;
  for (const auto& chi : characters_) m.push_back(chi);
  return mat_rank(m) == k;
}

bool RootMonoid::is_commutative() const {
  for (const auto& pair : roots_.pairs)
    if (pair.e1.vector != pair.e2.vector) return false;
  return true;
}

GroupElement RootMonoid::group_identity() const {
  return GroupElement{std::vector<Rat>(roots_.size(), Rat(0)),
                      std::vector<Rat>(tau_basis_.size(), Rat(1))};
}

GroupElement RootMonoid::group_multiply(const GroupElement& g, const GroupElement& h) const {
  const std::size_t k = roots_.size();
  if (g.alpha.size() != k || h.alpha.size() != k || g.torus.size() != tau_basis_.size() ||
      h.torus.size() != tau_basis_.size())
    throw std::invalid_argument("group_multiply: shape mismatch");
  GroupElement out;
  out.alpha.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    Rat chi_t = 1;
    for (std::size_t l = 0; l < tau_basis_.size(); ++l) chi_t *= pow_rat(g.torus[l], chi_in_tau_basis_[r][l]);
    out.alpha[r] = g.alpha[r] + chi_t * h.alpha[r];
  }
  for (std::size_t l = 0; l < tau_basis_.size(); ++l) out.torus.push_back(g.torus[l] * h.torus[l]);
  return out;
}

Point RootMonoid::to_point(const GroupElement& g) const {
  const std::size_t k = roots_.size();
  if (g.alpha.size() != k || g.torus.size() != tau_basis_.size())
    throw std::invalid_argument("to_point: shape mismatch");
  const FaceCtx& tau_ctx = ctx_of(tau_.ray_indices);
  const auto& gens = semigroup_.generators;

  std::vector<Rat> values(gens.size());
  for (std::size_t g_idx = 0; g_idx < gens.size(); ++g_idx) {
    const Vec& u = gens[g_idx];
    Vec u0 = u;
    Rat unipotent = 1;
    for (std::size_t r = 0; r < k; ++r) {
      const Int d = pairing(tau_ray_vectors_[r], u);
      if (d == 0) continue;
      u0 = add(u0, scale(d, roots_.pairs[r].e1.vector));
      unipotent *= pow_rat(g.alpha[r], d);  // 0^0 = 1 handled by d == 0 skip
    }
    if (unipotent == 0) {
      values[g_idx] = 0;
      continue;
    }
    const auto coeffs = solve_integer(tau_ctx.basis_smith, tau_basis_.size(), u0);
    if (!coeffs) throw std::logic_error("to_point: torus character escapes tau-perp");
    Rat t = 1;
    for (std::size_t l = 0; l < coeffs->size(); ++l) t *= pow_rat(g.torus[l], (*coeffs)[l]);
    values[g_idx] = t * unipotent;
  }
  return point_from_generator_values(values);
}

GroupElement RootMonoid::from_point(const Point& x) const {
  if (!is_invertible(x)) throw std::domain_error("from_point: point is not invertible");
  GroupElement g;
  for (const auto& pair : roots_.pairs) g.alpha.push_back(evaluate_local(x, negate(pair.e1.vector)));
  for (const auto& b : tau_basis_) g.torus.push_back(evaluate_local(x, b));
  return g;
}

}  // namespace toric

#include "toric/idempotents.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "toric/actions.hpp"

namespace toric {

namespace {

bool in_perp(const Cone& sigma, const Face& gamma, const Vec& u) {
  for (auto i : gamma.ray_indices)
    if (pairing(sigma.rays()[i], u) != 0) return false;
  return true;
}

std::vector<std::size_t> tau_rays_outside(const RootMonoid& X, const Face& gamma) {
  std::vector<std::size_t> out;
  for (std::size_t pos = 0; pos < X.tau().ray_indices.size(); ++pos) {
    const std::size_t idx = X.tau().ray_indices[pos];
    if (!std::binary_search(gamma.ray_indices.begin(), gamma.ray_indices.end(), idx)) out.push_back(pos);
  }
  return out;
}

Face union_face(const RootMonoid& X, const Face& gamma, const std::vector<std::size_t>& extra_ray_indices) {
  std::vector<std::size_t> rays = gamma.ray_indices;
  rays.insert(rays.end(), extra_ray_indices.begin(), extra_ray_indices.end());
  std::sort(rays.begin(), rays.end());
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  const auto f = face_from_rays(X.sigma(), rays);
  if (!f) throw std::logic_error("union_face: expected ray set is not a face");
  return *f;
}

}  // namespace

IdempotentLocus classify(const RootMonoid& X, const Face& gamma) {
  if (!is_face_of(X.sigma(), gamma)) throw std::invalid_argument("classify: not a face of sigma");
  IdempotentLocus locus;
  locus.gamma = gamma;

  const auto outside = tau_rays_outside(X, gamma);
  if (outside.empty()) {
    locus.tag = IdempotentCase::singleton;
    locus.witness = X.distinguished_point(gamma);
    locus.certificate = "tau contained in gamma";
    return locus;
  }

  // Case split on how the root pair of each outside ray meets gamma^perp.
  std::optional<std::string> both_out, both_in;
  for (auto pos : outside) {
    const bool in1 = in_perp(X.sigma(), gamma, X.roots().pairs[pos].e1.vector);
    const bool in2 = in_perp(X.sigma(), gamma, X.roots().pairs[pos].e2.vector);
    if (!in1 && !in2 && !both_out) both_out = "pair " + std::to_string(pos) + ": both roots outside gamma-perp";
    if (in1 && in2 && !both_in) both_in = "pair " + std::to_string(pos) + ": both roots inside gamma-perp";
  }
  if (both_out || both_in) {
    locus.tag = IdempotentCase::empty;
    locus.certificate = both_out ? ("(2.1) " + *both_out) : ("(2.2) " + *both_in);
    return locus;
  }

  locus.tag = IdempotentCase::positive;
  const Face joint = union_face(X, gamma, X.tau().ray_indices);
  locus.equations = perp_semigroup(X.sigma(), X.sigma_dual(), joint);
  locus.witness = X.distinguished_point(gamma);
  locus.certificate = "exactly-one pattern holds";
  return locus;
}

bool is_idempotent(const RootMonoid& X, const Point& x) { return X.multiply(x, x) == x; }

std::vector<Face> closure_faces(const RootMonoid& X, const Face& gamma) {
  const IdempotentLocus locus = classify(X, gamma);
  if (locus.tag == IdempotentCase::empty)
    throw std::domain_error("closure_faces: E_gamma is empty");

  const auto outside = tau_rays_outside(X, gamma);
  std::vector<Face> out;
  for (std::size_t mask = 0; mask < (std::size_t(1) << outside.size()); ++mask) {
    std::vector<std::size_t> extra;
    for (std::size_t b = 0; b < outside.size(); ++b)
      if (mask & (std::size_t(1) << b)) extra.push_back(X.tau().ray_indices[outside[b]]);
    out.push_back(union_face(X, gamma, extra));
  }
  std::sort(out.begin(), out.end(), [&](const Face& a, const Face& b) {
    const auto da = face_dim(X.sigma(), a), db = face_dim(X.sigma(), b);
    if (da != db) return da < db;
    return a.ray_indices < b.ray_indices;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const Face& a, const Face& b) { return a.ray_indices == b.ray_indices; }),
            out.end());
  return out;
}

std::vector<DemazureRoot> h_gamma_roots(const RootMonoid& X, const Face& gamma) {
  const IdempotentLocus locus = classify(X, gamma);
  if (locus.tag == IdempotentCase::empty)
    throw std::domain_error("h_gamma_roots: exactly-one pattern violated");

  std::vector<DemazureRoot> roots;
  for (auto pos : tau_rays_outside(X, gamma)) {
    const auto& pair = X.roots().pairs[pos];
    const bool in1 = in_perp(X.sigma(), gamma, pair.e1.vector);
    // The member inside gamma^perp drives the connected-orbit flows; its
    // partner pairs strictly positively with some ray of gamma.
    roots.push_back(in1 ? pair.e1 : pair.e2);
  }
  return roots;
}

Point sample_point_on_orbit(const RootMonoid& X, const Face& gamma, Rng& rng) {
  std::vector<Rat> values;
  for (std::size_t l = 0; l < X.face_basis(gamma).size(); ++l) values.push_back(rng.nonzero_rat());
  return X.make_point(gamma, std::move(values));
}

Point sample_point_with_unit_constraints(const RootMonoid& X, const Face& gamma,
                                         const std::vector<Vec>& constraints, Rng& rng) {
  const auto& basis = X.face_basis(gamma);
  Mat c_rows;
  for (const auto& w : constraints) {
    const auto coeffs = decompose_in_sublattice(w, basis);
    if (!coeffs) throw std::invalid_argument("sample_point_with_unit_constraints: constraint outside face lattice");
    c_rows.push_back(*coeffs);
  }
  const auto kernel = integer_kernel(c_rows, basis.size());

  std::vector<Rat> values(basis.size(), Rat(1));
  for (const auto& dir : kernel) {
    const Rat r = rng.nonzero_rat();
    for (std::size_t j = 0; j < basis.size(); ++j) values[j] *= pow_rat(r, dir[j]);
  }
  Point p = X.make_point(gamma, std::move(values));
  for (const auto& w : constraints)
    if (X.evaluate_local(p, w) != 1) throw std::logic_error("sample_point_with_unit_constraints: constraint violated");
  return p;
}

namespace {

// Exponent of `prime` in |q| plus the remaining cofactor sign bit bookkeeping
// is handled by the caller; returns the valuation and divides it out.
Int strip_prime(Rat& q, const Int& prime) {
  Int num = boost::multiprecision::numerator(q);
  Int den = boost::multiprecision::denominator(q);
  Int v = 0;
  while (num % prime == 0) {
    num /= prime;
    ++v;
  }
  while (den % prime == 0) {
    den /= prime;
    --v;
  }
  q = Rat(num, den);
  return v;
}

}  // namespace

std::optional<std::vector<Rat>> connect_by_ray_subtori(const RootMonoid& X, const Point& x, const Point& y) {
  if (x.face_rays != y.face_rays) return std::nullopt;
  const auto& basis = X.face_basis(X.face_of(x));
  const std::size_t k = X.tau().ray_indices.size();
  const std::size_t b = basis.size();

  // Exponent matrix of the joint R_tau action on the face coordinates.
  Mat e_rows(b, zero_vec(k));
  for (std::size_t l = 0; l < b; ++l)
    for (std::size_t r = 0; r < k; ++r)
      e_rows[l][r] = pairing(X.sigma().rays()[X.tau().ray_indices[r]], basis[l]);

  std::vector<Rat> target(b);
  for (std::size_t l = 0; l < b; ++l) target[l] = y.values[l] / x.values[l];

  // Factor the targets over a common prime list.
  std::set<Int> primes;
  std::vector<Rat> cofactor = target;
  for (auto& q : cofactor) {
    for (Int p = 2; p * p <= 1000000; ++p) {
      // trial division over the numerator and denominator
      if (boost::multiprecision::numerator(q) % p == 0 || boost::multiprecision::denominator(q) % p == 0) {
        primes.insert(p);
        strip_prime(q, p);
      }
      if (q == 1 || q == -1) break;
    }
    if (q != 1 && q != -1) {
      Rat a = q < 0 ? -q : q;
      const Int num = boost::multiprecision::numerator(a);
      const Int den = boost::multiprecision::denominator(a);
      if (num != 1) primes.insert(num);
      if (den != 1) primes.insert(den);
    }
  }

  std::vector<Vec> exponents;  // per prime, the solved t-exponents
  std::vector<Int> prime_list(primes.begin(), primes.end());
  for (const auto& p : prime_list) {
    Vec rhs(b, Int(0));
    for (std::size_t l = 0; l < b; ++l) {
      Rat q = target[l];
      rhs[l] = strip_prime(q, p);
    }
    const auto sol = solve_integer(e_rows, rhs);
    if (!sol) return std::nullopt;
    exponents.push_back(*sol);
  }

  // Signs over GF(2).
  std::vector<std::vector<int>> m2(b, std::vector<int>(k + 1, 0));
  for (std::size_t l = 0; l < b; ++l) {
    for (std::size_t r = 0; r < k; ++r) m2[l][r] = static_cast<int>(boost::multiprecision::abs(e_rows[l][r]) % 2);
    m2[l][k] = target[l] < 0 ? 1 : 0;
  }
  std::size_t row = 0;
  std::vector<int> pivot_of_col(k, -1);
  for (std::size_t col = 0; col < k && row < b; ++col) {
    std::size_t p = row;
    while (p < b && m2[p][col] == 0) ++p;
    if (p == b) continue;
    std::swap(m2[p], m2[row]);
    for (std::size_t i = 0; i < b; ++i)
      if (i != row && m2[i][col])
        for (std::size_t j = 0; j <= k; ++j) m2[i][j] ^= m2[row][j];
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  for (std::size_t i = row; i < b; ++i)
    if (m2[i][k]) return std::nullopt;
  std::vector<int> sign_bits(k, 0);
  for (std::size_t col = 0; col < k; ++col)
    if (pivot_of_col[col] >= 0) sign_bits[col] = m2[pivot_of_col[col]][k];

  std::vector<Rat> t(k, Rat(1));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t pi = 0; pi < prime_list.size(); ++pi) t[r] *= pow_rat(Rat(prime_list[pi]), exponents[pi][r]);
    if (sign_bits[r]) t[r] = -t[r];
  }

  // Exact verification; the solve is only a candidate until it reproduces y.
  Point z = x;
  for (std::size_t r = 0; r < k; ++r)
    z = ray_subtorus_action(X, X.sigma().rays()[X.tau().ray_indices[r]], t[r], z);
  if (!(z == y)) return std::nullopt;
  return t;
}

OrbitStructureReport verify_orbit_structure(const RootMonoid& X, const Face& gamma, std::size_t samples,
                                            std::uint64_t seed) {
  const IdempotentLocus locus = classify(X, gamma);
  if (locus.tag == IdempotentCase::empty)
    throw std::domain_error("verify_orbit_structure: E_gamma is empty");

  OrbitStructureReport report;
  Rng rng(seed);
  const Face joint = union_face(X, gamma, X.tau().ray_indices);
  const std::vector<Vec> equations = perp_semigroup(X.sigma(), X.sigma_dual(), joint);
  const Point x_gamma = X.distinguished_point(gamma);

  auto fail = [&](std::string msg) {
    report.passed = false;
    report.failures.push_back(std::move(msg));
  };

  // (a) torus translates of x_gamma stay on the locus and idempotent.
  for (std::size_t s = 0; s < samples; ++s) {
    Point z = x_gamma;
    for (auto idx : X.tau().ray_indices) z = ray_subtorus_action(X, X.sigma().rays()[idx], rng.nonzero_rat(), z);
    ++report.torus_translates_checked;
    if (!is_idempotent(X, z)) {
      fail("torus translate of x_gamma is not idempotent");
      break;
    }
    for (const auto& u : equations)
      if (X.evaluate_local(z, u) != 1) {
        fail("torus translate of x_gamma violates a locus equation");
        break;
      }
  }

  // (b) unipotent flows from x_{cone(tau,gamma)} land exactly on the closure
  // loci; each flown point is idempotent.
  const auto roots = h_gamma_roots(X, gamma);
  const auto outside = tau_rays_outside(X, gamma);
  const Point apex = X.distinguished_point(joint);
  const auto closure = closure_faces(X, gamma);
  std::set<std::vector<std::size_t>> closure_keys, reached;
  for (const auto& f : closure) closure_keys.insert(f.ray_indices);

  for (std::size_t mask = 0; mask < (std::size_t(1) << roots.size()); ++mask) {
    Point z = apex;
    std::vector<std::size_t> expected = gamma.ray_indices;
    for (std::size_t bit = 0; bit < roots.size(); ++bit) {
      if (mask & (std::size_t(1) << bit)) {
        z = root_subgroup_action(X, roots[bit], rng.nonzero_rat(), z);
      } else {
        expected.push_back(X.tau().ray_indices[outside[bit]]);
      }
    }
    std::sort(expected.begin(), expected.end());
    expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
    ++report.flow_points_checked;
    reached.insert(z.face_rays);
    if (!closure_keys.count(z.face_rays)) {
      fail("unipotent flow left the closure loci");
      continue;
    }
    if (z.face_rays != expected) fail("unipotent flow reached an unexpected orbit");
    if (!is_idempotent(X, z)) fail("unipotent flow produced a non-idempotent point");
  }
  if (reached != closure_keys) fail("unipotent flows did not reach every closure locus");

  // (c) orbit points violating the equations are never idempotent.
  for (std::size_t s = 0; s < samples; ++s) {
    const Point z = sample_point_on_orbit(X, gamma, rng);
    bool on_locus = true;
    for (const auto& u : equations) on_locus &= (X.evaluate_local(z, u) == 1);
    if (on_locus) continue;
    ++report.off_locus_checked;
    if (is_idempotent(X, z)) {
      fail("off-locus orbit point is idempotent");
      break;
    }
  }
  return report;
}

}  // namespace toric

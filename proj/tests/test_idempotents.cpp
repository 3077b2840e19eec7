#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "toric/actions.hpp"
#include "toric/idempotents.hpp"
#include "toric/presets.hpp"

#include <set>

using namespace toric;
using namespace toric::testsupport;

namespace {

// Exactly-one pattern on both rays of tau for gamma = cone(p3).
RootMonoid cylinder_positive() { return quadric_cylinder_monoid(CylinderParams{0, 1, 1, 1, 0, 1, 2, 2}); }

// Both roots of p1 in gamma-perp for gamma = cone(p3).
RootMonoid cylinder_empty() { return quadric_cylinder_monoid(CylinderParams{0, 1, 0, 2, 0, 1, 2, 2}); }

Face face_of_vec(const RootMonoid& X, const std::vector<Vec>& rays) {
  std::vector<std::size_t> idx;
  for (const auto& v : rays)
    for (std::size_t i = 0; i < X.sigma().rays().size(); ++i)
      if (X.sigma().rays()[i] == v) idx.push_back(i);
  std::sort(idx.begin(), idx.end());
  return *face_from_rays(X.sigma(), idx);
}

}  // namespace

TEST_CASE("classification cases") {
  const RootMonoid X = cylinder_positive();

  SUBCASE("gamma containing tau is a singleton") {
    const auto locus = classify(X, X.tau());
    CHECK(locus.tag == IdempotentCase::singleton);
    REQUIRE(locus.witness.has_value());
    CHECK(*locus.witness == X.neutral());
    CHECK(is_idempotent(X, *locus.witness));
  }

  SUBCASE("exactly-one pattern on cone(p3) is positive") {
    const Face gamma = face_of_vec(X, {Vec{0, 0, 1, 0}});
    const auto locus = classify(X, gamma);
    CHECK(locus.tag == IdempotentCase::positive);
    REQUIRE(locus.witness.has_value());
    CHECK(is_idempotent(X, *locus.witness));
    // Equations generate cone(tau,gamma)-perp ∩ S_sigma; here that face is
    // cone(p1,p2,p3) and the semigroup is generated by q4.
    CHECK(locus.equations == std::vector<Vec>{Vec{0, 0, 0, 1}});
  }

  SUBCASE("matching roots on cone(p3) kill the idempotents") {
    const RootMonoid Y = cylinder_empty();
    const Face gamma = face_of_vec(Y, {Vec{0, 0, 1, 0}});
    const auto locus = classify(Y, gamma);
    CHECK(locus.tag == IdempotentCase::empty);
    CHECK(locus.certificate.find("(2.2)") == 0);

    Rng rng(5);
    for (int s = 0; s < 100; ++s) CHECK_FALSE(is_idempotent(Y, sample_point_on_orbit(Y, gamma, rng)));
  }

  SUBCASE("both roots off gamma-perp kill the idempotents") {
    const RootMonoid Y = cylinder_positive();
    // gamma = cone(p4): e-roots pair with p4 through their last coordinate,
    // so all four roots are off gamma-perp.
    const Face gamma = face_of_vec(Y, {Vec{0, 1, 0, 1}});
    const auto locus = classify(Y, gamma);
    CHECK(locus.tag == IdempotentCase::empty);
    CHECK(locus.certificate.find("(2.1)") == 0);

    Rng rng(7);
    for (int s = 0; s < 100; ++s) CHECK_FALSE(is_idempotent(Y, sample_point_on_orbit(Y, gamma, rng)));
  }
}

TEST_CASE("is_idempotent basics") {
  Rng rng(11);
  const RootMonoid X = cylinder_positive();
  CHECK(is_idempotent(X, X.neutral()));
  for (int s = 0; s < 20; ++s) {
    const Point y = random_invertible_point(X, rng);
    if (y == X.neutral()) continue;
    CHECK_FALSE(is_idempotent(X, y));
  }
}

TEST_CASE("points sampled on a positive locus are idempotent, off-locus ones are not") {
  Rng rng(13);
  const RootMonoid X = cylinder_positive();
  const Face gamma = face_of_vec(X, {Vec{0, 0, 1, 0}});
  const auto locus = classify(X, gamma);
  REQUIRE(locus.tag == IdempotentCase::positive);

  for (int s = 0; s < 50; ++s) {
    const Point on = sample_point_with_unit_constraints(X, gamma, locus.equations, rng);
    CHECK(is_idempotent(X, on));
  }
  int off_checked = 0;
  while (off_checked < 50) {
    const Point z = sample_point_on_orbit(X, gamma, rng);
    bool on_locus = true;
    for (const auto& u : locus.equations) on_locus &= (X.evaluate_local(z, u) == 1);
    if (on_locus) continue;
    CHECK_FALSE(is_idempotent(X, z));
    ++off_checked;
  }
}

TEST_CASE("closure faces") {
  const RootMonoid X = cylinder_positive();

  SUBCASE("gamma containing tau closes onto itself") {
    const auto fs = closure_faces(X, X.tau());
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].ray_indices == X.tau().ray_indices);
  }

  SUBCASE("a positive face with two outside rays has four closure faces") {
    const Face gamma = face_of_vec(X, {Vec{0, 0, 1, 0}});
    REQUIRE(classify(X, gamma).tag == IdempotentCase::positive);
    const auto fs = closure_faces(X, gamma);
    CHECK(fs.size() == 4);
    for (const auto& f : fs) CHECK(classify(X, f).tag != IdempotentCase::empty);
    std::set<std::size_t> dims;
    for (const auto& f : fs) dims.insert(face_dim(X.sigma(), f));
    CHECK(dims == std::set<std::size_t>{1, 2, 3});
  }

  SUBCASE("empty loci reject closure queries") {
    const RootMonoid Y = cylinder_empty();
    const Face gamma = face_of_vec(Y, {Vec{0, 0, 1, 0}});
    CHECK_THROWS_AS(closure_faces(Y, gamma), std::domain_error);
  }
}

TEST_CASE("h_gamma_roots picks the member lying in gamma-perp") {
  const RootMonoid X = cylinder_positive();
  const Face gamma = face_of_vec(X, {Vec{0, 0, 1, 0}});

  CHECK(h_gamma_roots(X, X.tau()).empty());

  const auto roots = h_gamma_roots(X, gamma);
  REQUIRE(roots.size() == 2);
  for (const auto& e : roots) {
    bool in_perp = true;
    for (auto i : gamma.ray_indices) in_perp &= (pairing(X.sigma().rays()[i], e.vector) == 0);
    CHECK(in_perp);
    // Its partner pairs strictly positively with some ray of gamma.
    for (const auto& pair : X.roots().pairs) {
      const Vec* partner = nullptr;
      if (pair.e1.vector == e.vector) partner = &pair.e2.vector;
      if (pair.e2.vector == e.vector) partner = &pair.e1.vector;
      if (!partner) continue;
      bool partner_off = false;
      for (auto i : gamma.ray_indices) partner_off |= (pairing(X.sigma().rays()[i], *partner) != 0);
      CHECK(partner_off);
    }
  }
}

TEST_CASE("verify_orbit_structure") {
  const RootMonoid X = cylinder_positive();

  SUBCASE("trivial on gamma containing tau") {
    const auto report = verify_orbit_structure(X, X.tau(), 20, 99);
    CHECK(report.passed);
  }

  SUBCASE("full suite on the positive cone(p3) locus") {
    const Face gamma = face_of_vec(X, {Vec{0, 0, 1, 0}});
    const auto report = verify_orbit_structure(X, gamma, 100, 99);
    for (const auto& f : report.failures) MESSAGE(f);
    CHECK(report.passed);
    CHECK(report.torus_translates_checked >= 100);
    CHECK(report.off_locus_checked > 0);
  }

  SUBCASE("flipping the root choice breaks the flow check") {
    const Face gamma = face_of_vec(X, {Vec{0, 0, 1, 0}});
    const auto good = h_gamma_roots(X, gamma);
    const Face joint = *face_from_rays(
        X.sigma(), [&] {
          std::vector<std::size_t> r = gamma.ray_indices;
          r.insert(r.end(), X.tau().ray_indices.begin(), X.tau().ray_indices.end());
          std::sort(r.begin(), r.end());
          return r;
        }());
    const Point apex = X.distinguished_point(joint);

    // The partner roots (off gamma-perp) fix the apex, so the flows cannot
    // sweep out the closure.
    Rng rng(101);
    std::set<std::vector<std::size_t>> reached;
    for (const auto& pair : X.roots().pairs) {
      for (const DemazureRoot* e : {&pair.e1, &pair.e2}) {
        bool is_good = false;
        for (const auto& g : good) is_good |= (g.vector == e->vector);
        if (is_good) continue;
        for (int s = 0; s < 10; ++s)
          reached.insert(root_subgroup_action(X, *e, rng.nonzero_rat(), apex).face_rays);
      }
    }
    CHECK(reached == std::set<std::vector<std::size_t>>{joint.ray_indices});
  }
}

TEST_CASE("idempotent set is invariant under the tau-ray subtori") {
  Rng rng(103);
  const RootMonoid X = cylinder_positive();
  const Face gamma = face_of_vec(X, {Vec{0, 0, 1, 0}});
  const auto locus = classify(X, gamma);

  for (int s = 0; s < 30; ++s) {
    const Point x = sample_point_with_unit_constraints(X, gamma, locus.equations, rng);
    REQUIRE(is_idempotent(X, x));
    for (auto i : X.tau().ray_indices) {
      const Point moved = ray_subtorus_action(X, X.sigma().rays()[i], rng.nonzero_rat(), x);
      CHECK(is_idempotent(X, moved));
    }
  }
}

TEST_CASE("a positive locus is a single orbit of the tau subtori") {
  Rng rng(107);
  const RootMonoid X = cylinder_positive();
  const Face gamma = face_of_vec(X, {Vec{0, 0, 1, 0}});
  const auto locus = classify(X, gamma);

  for (int s = 0; s < 25; ++s) {
    const Point x = sample_point_with_unit_constraints(X, gamma, locus.equations, rng);
    const Point y = sample_point_with_unit_constraints(X, gamma, locus.equations, rng);
    const auto t = connect_by_ray_subtori(X, x, y);
    REQUIRE(t.has_value());
    Point moved = x;
    for (std::size_t r = 0; r < t->size(); ++r)
      moved = ray_subtorus_action(X, X.sigma().rays()[X.tau().ray_indices[r]], (*t)[r], moved);
    CHECK(moved == y);
  }
}

TEST_CASE("orbit structure on random instances") {
  Rng rng(109);
  int verified = 0;
  for (int i = 0; i < 8; ++i) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 4));
    const std::size_t k = static_cast<std::size_t>(rng.uniform(0, std::min<long>(2, static_cast<long>(n) - 1)));
    const auto cf = random_cone_with_regular_face(n, k, rng);
    const auto roots = compatible_pairs_with_differences(cf.sigma, cf.tau, random_differences(cf.sigma, cf.tau, rng));
    const RootMonoid X = RootMonoid::build(cf.sigma, cf.tau, roots);
    for (const auto& f : X.all_faces()) {
      if (classify(X, f).tag != IdempotentCase::positive) continue;
      const auto report = verify_orbit_structure(X, f, 8, rng.next_u64());
      for (const auto& msg : report.failures) MESSAGE(msg);
      CHECK(report.passed);
      ++verified;
    }
  }
  CHECK(verified > 0);
}

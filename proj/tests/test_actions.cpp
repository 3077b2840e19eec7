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

RootMonoid cylinder() { return quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3}); }

std::vector<Rat> identity_torus(std::size_t n) { return std::vector<Rat>(n, Rat(1)); }

}  // namespace

TEST_CASE("ambient torus action") {
  Rng rng(61);
  const RootMonoid X = cylinder();

  for (int s = 0; s < 50; ++s) {
    const Point x = random_point(X, rng);
    CHECK(ambient_torus_action(X, identity_torus(4), x) == x);

    std::vector<Rat> t;
    for (int i = 0; i < 4; ++i) t.push_back(rng.nonzero_rat());
    const Point tx = ambient_torus_action(X, t, x);
    CHECK(tx.face_rays == x.face_rays);  // support is preserved

    for (const auto& u : X.semigroup().generators) {
      Rat tu = 1;
      for (std::size_t i = 0; i < 4; ++i) tu *= pow_rat(t[i], u[i]);
      CHECK(X.evaluate(tx, u) == tu * X.evaluate(x, u));
    }
  }
  CHECK_THROWS_AS(ambient_torus_action(X, {Rat(1), Rat(0), Rat(1), Rat(1)}, X.neutral()), std::invalid_argument);
}

TEST_CASE("ray subtorus action") {
  Rng rng(67);
  const RootMonoid X = cylinder();

  SUBCASE("identity parameter and the scaling rule") {
    for (int s = 0; s < 30; ++s) {
      const Point x = random_point(X, rng);
      CHECK(ray_subtorus_action(X, Vec{1, 0, 0, 0}, Rat(1), x) == x);
      const Rat t = rng.nonzero_rat();
      const Point tx = ray_subtorus_action(X, Vec{0, 1, 0, 1}, t, x);
      for (const auto& u : X.semigroup().generators)
        CHECK(X.evaluate(tx, u) == pow_rat(t, pairing(Vec{0, 1, 0, 1}, u)) * X.evaluate(x, u));
    }
  }

  SUBCASE("fixed points are the orbits whose face spans the ray") {
    for (const auto& f : X.all_faces()) {
      Rng local(71);
      const Point x = sample_point_on_orbit(X, f, local);
      for (const auto& p : X.sigma().rays()) {
        // p lies in the span of the face iff it pairs to zero with the
        // face's perp basis.
        bool in_span = true;
        for (const auto& b : X.face_basis(f)) in_span &= (pairing(p, b) == 0);
        const Point moved = ray_subtorus_action(X, p, Rat(5, 3), x);
        CHECK((moved == x) == in_span);
      }
    }
  }

  SUBCASE("one-dimensional orbits give distinct translates") {
    // p1 does not lie in the span of the open orbit's face, so it moves.
    const Point x = X.distinguished_point(*face_from_rays(X.sigma(), {}));
    const Point a = ray_subtorus_action(X, Vec{1, 0, 0, 0}, Rat(2), x);
    const Point b = ray_subtorus_action(X, Vec{1, 0, 0, 0}, Rat(3), x);
    CHECK_FALSE(a == b);
  }

  CHECK_THROWS_AS(ray_subtorus_action(X, Vec{1, 0, 0, 0}, Rat(0), X.neutral()), std::invalid_argument);
  CHECK_THROWS_AS(ray_subtorus_action(X, Vec{2, 0, 0, 0}, Rat(2), X.neutral()), std::invalid_argument);
}

TEST_CASE("root subgroup action") {
  Rng rng(73);
  const RootMonoid X = cylinder();

  SUBCASE("zero parameter is the identity") {
    for (const auto& pair : X.roots().pairs)
      for (int s = 0; s < 10; ++s) {
        const Point x = random_point(X, rng);
        CHECK(root_subgroup_action(X, pair.e1, Rat(0), x) == x);
      }
  }

  SUBCASE("additivity of the exponential flow") {
    for (const auto& pair : X.roots().pairs) {
      for (int s = 0; s < 50; ++s) {
        const Point x = random_point(X, rng);
        const Rat a = rng.small_rat(), b = rng.small_rat();
        const Point lhs = root_subgroup_action(X, pair.e2, b, root_subgroup_action(X, pair.e2, a, x));
        const Point rhs = root_subgroup_action(X, pair.e2, a + b, x);
        CHECK(lhs == rhs);
      }
    }
  }

  SUBCASE("degenerate parameter lands in the adjacent smaller orbit") {
    const DemazureRoot e = X.roots().pairs[0].e1;
    for (const auto& pr : he_connected_pairs(X.sigma(), e)) {
      Rng local(79);
      const Point x = sample_point_on_orbit(X, pr.gamma1, local);
      const Rat chi_e = X.evaluate_local(x, e.vector);
      REQUIRE(chi_e != 0);
      const Rat a_star = Rat(-1) / chi_e;
      const Point boundary = root_subgroup_action(X, e, a_star, x);
      CHECK(boundary.face_rays == pr.gamma2.ray_indices);
      // Any other parameter keeps the point in its orbit.
      const Point stay = root_subgroup_action(X, e, a_star + 1, x);
      CHECK(stay.face_rays == pr.gamma1.ray_indices);
    }
  }

  SUBCASE("conjugation by a ray subtorus rescales the parameter") {
    for (int s = 0; s < 25; ++s) {
      const Point x = random_point(X, rng);
      const DemazureRoot& e = X.roots().pairs[s % 2].e2;
      const Rat t = rng.nonzero_rat();
      const Rat a = rng.small_rat();
      for (const auto& p : X.sigma().rays()) {
        const Point lhs = ray_subtorus_action(
            X, p, Rat(1) / t, root_subgroup_action(X, e, a, ray_subtorus_action(X, p, t, x)));
        const Point rhs = root_subgroup_action(X, e, a * pow_rat(t, pairing(p, e.vector)), x);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("H_e-connected pairs") {
  const RootMonoid X = cylinder();

  SUBCASE("the zero face always pairs with the distinguished ray") {
    for (const auto& pair_set : X.roots().pairs) {
      for (const DemazureRoot* e : {&pair_set.e1, &pair_set.e2}) {
        const auto pairs = he_connected_pairs(X.sigma(), *e);
        bool found = false;
        for (const auto& pr : pairs)
          if (pr.gamma1.ray_indices.empty() && pr.gamma2.ray_indices == std::vector<std::size_t>{e->ray_index})
            found = true;
        CHECK(found);
      }
    }
  }

  SUBCASE("combinatorial pairs agree with dynamic orbit jumps") {
    Rng rng(83);
    for (const auto& pair_set : X.roots().pairs) {
      for (const DemazureRoot* e : {&pair_set.e1, &pair_set.e2}) {
        const auto pairs = he_connected_pairs(X.sigma(), *e);
        std::set<std::vector<std::size_t>> sources;
        for (const auto& pr : pairs) {
          sources.insert(pr.gamma1.ray_indices);
          const Point x = sample_point_on_orbit(X, pr.gamma1, rng);
          const Rat chi_e = X.evaluate_local(x, e->vector);
          REQUIRE(chi_e != 0);
          const Point jumped = root_subgroup_action(X, *e, Rat(-1) / chi_e, x);
          CHECK(jumped.face_rays == pr.gamma2.ray_indices);
        }
        // Each source face appears at most once.
        CHECK(sources.size() == pairs.size());

        // Faces in no pair never change orbit under sampled flows.
        std::set<std::vector<std::size_t>> involved = sources;
        for (const auto& pr : pairs) involved.insert(pr.gamma2.ray_indices);
        for (const auto& f : X.all_faces()) {
          if (involved.count(f.ray_indices)) continue;
          const Point x = sample_point_on_orbit(X, f, rng);
          for (int s = 0; s < 5; ++s) {
            const Point moved = root_subgroup_action(X, *e, rng.small_rat(), x);
            CHECK(moved.face_rays == f.ray_indices);
          }
        }
      }
    }
  }
}

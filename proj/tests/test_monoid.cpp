#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "toric/monoid.hpp"
#include "toric/presets.hpp"

using namespace toric;
using namespace toric::testsupport;

namespace {

std::vector<Vec> affine_chars(std::size_t n) {
  std::vector<Vec> chars;
  for (std::size_t i = 0; i < n; ++i) {
    Vec e = zero_vec(n);
    e[i] = 1;
    chars.push_back(e);
  }
  return chars;
}

// The two explicit affine-space instances: same a-data, b1 differs.
RootMonoid affine_instance_1() { return affine_space_monoid(4, 2, {Vec{0, 0}, Vec{1, 0}}, {Vec{1, 2}, Vec{3, 4}}); }
RootMonoid affine_instance_2() { return affine_space_monoid(4, 2, {Vec{0, 0}, Vec{1, 0}}, {Vec{1, 1}, Vec{3, 4}}); }

RootMonoid torus_only_monoid() {
  const Cone sigma = orthant(2);
  const Face zero = *face_from_rays(sigma, {});
  return RootMonoid::build(sigma, zero, DemazureRootPairSet{});
}

}  // namespace

TEST_CASE("build validates its inputs") {
  const Cone sigma = orthant(2);
  const Face zero = *face_from_rays(sigma, {});
  CHECK_NOTHROW(RootMonoid::build(sigma, zero, DemazureRootPairSet{}));

  const Face full = *face_from_rays(sigma, {0, 1});
  DemazureRootPairSet bad;
  bad.pairs.push_back(RootPair{DemazureRoot{Vec{-1, 0}, 1}, DemazureRoot{Vec{-1, 0}, 1}});
  bad.pairs.push_back(RootPair{DemazureRoot{Vec{-1, 0}, 1}, DemazureRoot{Vec{-1, 0}, 1}});
  CHECK_THROWS_AS(RootMonoid::build(sigma, full, bad), std::invalid_argument);
}

TEST_CASE("distinguished point evaluation") {
  const RootMonoid X = quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3});
  const Point& xt = X.neutral();
  for (const auto& u : X.semigroup().generators) {
    bool in_tau_perp = true;
    for (auto i : X.tau().ray_indices) in_tau_perp &= (pairing(X.sigma().rays()[i], u) == 0);
    CHECK(X.evaluate(xt, u) == (in_tau_perp ? 1 : 0));
  }
  CHECK_THROWS_AS(X.evaluate(xt, Vec{-1, 0, 0, 0}), std::invalid_argument);

  Rng rng(3);
  const Point open_ones = X.make_point(*face_from_rays(X.sigma(), {}), {Rat(1), Rat(1), Rat(1), Rat(1)});
  for (int i = 0; i < 10; ++i) {
    Vec u = zero_vec(4);
    for (const auto& g : X.semigroup().generators) u = add(u, scale(rng.uniform(0, 2), g));
    CHECK(X.evaluate(open_ones, u) == 1);
  }
}

TEST_CASE("neutral element law") {
  Rng rng(17);
  std::vector<RootMonoid> monoids;
  monoids.push_back(affine_instance_1());
  monoids.push_back(quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3}));
  monoids.push_back(torus_only_monoid());
  for (const auto& X : monoids) {
    for (int s = 0; s < 50; ++s) {
      const Point x = random_point(X, rng);
      CHECK(X.multiply(X.neutral(), x) == x);
      CHECK(X.multiply(x, X.neutral()) == x);
    }
  }
}

TEST_CASE("affine space closed forms") {
  Rng rng(23);
  const auto chars = affine_chars(4);

  SUBCASE("first instance reproduces its printed product and is non-active") {
    const RootMonoid X = affine_instance_1();
    CHECK_FALSE(X.is_active());
    for (int s = 0; s < 20; ++s) {
      const Point xp = random_point(X, rng), yp = random_point(X, rng);
      const auto x = coordinates(X, chars, xp), y = coordinates(X, chars, yp);
      const auto z = coordinates(X, chars, X.multiply(xp, yp));
      CHECK(z[0] == x[0] + y[0] * x[2] * x[3] * x[3]);
      CHECK(z[1] == x[1] * y[2] + y[1] * x[2] * x[2] * x[2] * x[3] * x[3] * x[3] * x[3]);
      CHECK(z[2] == x[2] * y[2]);
      CHECK(z[3] == x[3] * y[3]);
    }
  }

  SUBCASE("second instance reproduces its printed product and is active") {
    const RootMonoid X = affine_instance_2();
    CHECK(X.is_active());
    for (int s = 0; s < 20; ++s) {
      const Point xp = random_point(X, rng), yp = random_point(X, rng);
      const auto x = coordinates(X, chars, xp), y = coordinates(X, chars, yp);
      const auto z = coordinates(X, chars, X.multiply(xp, yp));
      CHECK(z[0] == x[0] + y[0] * x[2] * x[3]);
      CHECK(z[1] == x[1] * y[2] + y[1] * x[2] * x[2] * x[2] * x[3] * x[3] * x[3] * x[3]);
      CHECK(z[2] == x[2] * y[2]);
      CHECK(z[3] == x[3] * y[3]);
    }
  }

  SUBCASE("zero exponents degenerate to the additive-multiplicative split") {
    const RootMonoid X = affine_space_monoid(3, 2, {zero_vec(1), zero_vec(1)}, {zero_vec(1), zero_vec(1)});
    const auto chars3 = affine_chars(3);
    for (int s = 0; s < 20; ++s) {
      const Point xp = random_point(X, rng), yp = random_point(X, rng);
      const auto x = coordinates(X, chars3, xp), y = coordinates(X, chars3, yp);
      const auto z = coordinates(X, chars3, X.multiply(xp, yp));
      CHECK(z[0] == x[0] + y[0]);
      CHECK(z[1] == x[1] + y[1]);
      CHECK(z[2] == x[2] * y[2]);
    }
  }
}

TEST_CASE("cylinder closed form matches the general engine") {
  Rng rng(29);
  const auto qs = cylinder_coordinates();
  const std::vector<CylinderParams> params = {
      CylinderParams{1, 1, 0, 2, 0, 1, 2, 3},
      CylinderParams{0, 1, 0, 1, 0, 1, 0, 1},   // commutative
      CylinderParams{2, 3, 2, 3, 1, 1, 0, 2},   // degenerate first pair
  };
  for (const auto& p : params) {
    const RootMonoid X = quadric_cylinder_monoid(p);
    for (int s = 0; s < 20; ++s) {
      const Point xp = random_point(X, rng), yp = random_point(X, rng);
      const auto x = coordinates(X, qs, xp), y = coordinates(X, qs, yp);
      CHECK(x[0] * x[1] == x[3] * x[4]);  // points live on the cylinder
      const auto z = coordinates(X, qs, X.multiply(xp, yp));
      CHECK(z == cylinder_closed_form(p, x, y));
    }
  }
}

TEST_CASE("homomorphism coherence on the cylinder relation") {
  Rng rng(31);
  const RootMonoid X = quadric_cylinder_monoid(CylinderParams{1, 2, 0, 1, 0, 1, 1, 1});
  const auto qs = cylinder_coordinates();
  for (int s = 0; s < 30; ++s) {
    const Point z = X.multiply(random_point(X, rng), random_point(X, rng));
    const auto v = coordinates(X, qs, z);
    CHECK(v[0] * v[1] == v[3] * v[4]);
  }
}

TEST_CASE("support law: products evaluate consistently on non-generator characters") {
  Rng rng(37);
  const RootMonoid X = quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3});
  const std::size_t k = X.unipotent_rank();
  for (int s = 0; s < 10; ++s) {
    const Point x = random_point(X, rng), y = random_point(X, rng);
    const Point z = X.multiply(x, y);
    for (int extra = 0; extra < 5; ++extra) {
      Vec u = zero_vec(4);
      for (const auto& g : X.semigroup().generators) u = add(u, scale(rng.uniform(0, 2), g));
      // Defining sum evaluated directly.
      std::vector<Int> degree;
      for (auto i : X.tau().ray_indices) degree.push_back(pairing(X.sigma().rays()[i], u));
      std::vector<Int> iv(k, 0);
      Rat total = 0;
      while (true) {
        Int coef = 1;
        Vec ux = u, uy = u;
        for (std::size_t r = 0; r < k; ++r) {
          coef *= binomial(degree[r], iv[r]);
          ux = add(ux, scale(iv[r], X.roots().pairs[r].e2.vector));
          uy = add(uy, scale(degree[r] - iv[r], X.roots().pairs[r].e1.vector));
        }
        total += Rat(coef) * X.evaluate(x, ux) * X.evaluate(y, uy);
        std::size_t r = 0;
        while (r < k) {
          ++iv[r];
          if (iv[r] <= degree[r]) break;
          iv[r] = 0;
          ++r;
        }
        if (r == k) break;
      }
      CHECK(X.evaluate(z, u) == total);
    }
  }
}

TEST_CASE("invertibility and inverse") {
  Rng rng(41);
  const RootMonoid X = quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3});

  CHECK(X.is_invertible(X.neutral()));
  CHECK(X.inverse(X.neutral()) == X.neutral());

  SUBCASE("points off the unit chart are not invertible") {
    for (const auto& f : X.all_faces()) {
      const Point xg = X.distinguished_point(f);
      const bool inside = std::includes(X.tau().ray_indices.begin(), X.tau().ray_indices.end(),
                                        f.ray_indices.begin(), f.ray_indices.end());
      CHECK(X.is_invertible(xg) == inside);
      CHECK((X.evaluate(xg, X.tau_interior_functional()) != 0) == inside);
      if (!inside) CHECK_THROWS_AS(X.inverse(xg), std::domain_error);
    }
  }

  SUBCASE("two-sided inverse law on random invertible points") {
    for (int s = 0; s < 50; ++s) {
      const Point y = random_invertible_point(X, rng);
      const Point z = X.inverse(y);
      CHECK(X.multiply(y, z) == X.neutral());
      CHECK(X.multiply(z, y) == X.neutral());
    }
  }

  SUBCASE("torus points invert by coordinate-wise reciprocal") {
    GroupElement g = X.group_identity();
    for (auto& t : g.torus) t = rng.nonzero_rat();
    const Point y = X.to_point(g);
    const Point z = X.inverse(y);
    for (const auto& b : X.tau_perp_basis())
      CHECK(X.evaluate_local(z, b) == Rat(1) / X.evaluate_local(y, b));
  }

  SUBCASE("invertibility agrees with solvability of multiply(x, .) = neutral") {
    for (int s = 0; s < 20; ++s) {
      const Point x = random_point(X, rng);
      if (X.is_invertible(x)) {
        CHECK(X.multiply(x, X.inverse(x)) == X.neutral());
      } else {
        CHECK_THROWS_AS(X.inverse(x), std::domain_error);
      }
    }
  }
}

TEST_CASE("group coordinates") {
  Rng rng(43);
  const RootMonoid X = quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3});

  SUBCASE("identity laws") {
    const GroupElement e = X.group_identity();
    CHECK(X.to_point(e) == X.neutral());
    GroupElement g = X.group_identity();
    for (auto& a : g.alpha) a = rng.small_rat();
    for (auto& t : g.torus) t = rng.nonzero_rat();
    CHECK(X.group_multiply(g, e) == g);
    CHECK(X.group_multiply(e, g) == g);
  }

  SUBCASE("a noncommuting pair exists when some character is nonzero") {
    GroupElement g = X.group_identity(), h = X.group_identity();
    g.alpha[0] = 1;
    h.torus[0] = 2;
    h.torus[1] = 3;
    const bool gh_ne_hg = !(X.group_multiply(g, h) == X.group_multiply(h, g));
    CHECK(gh_ne_hg);
  }

  SUBCASE("group multiplication matches monoid multiplication under to_point") {
    for (int s = 0; s < 100; ++s) {
      GroupElement g = X.group_identity(), h = X.group_identity();
      for (auto& a : g.alpha) a = rng.small_rat();
      for (auto& t : g.torus) t = rng.nonzero_rat();
      for (auto& a : h.alpha) a = rng.small_rat();
      for (auto& t : h.torus) t = rng.nonzero_rat();
      CHECK(X.to_point(X.group_multiply(g, h)) == X.multiply(X.to_point(g), X.to_point(h)));
    }
  }

  SUBCASE("round trip between representations") {
    for (int s = 0; s < 100; ++s) {
      GroupElement g = X.group_identity();
      for (auto& a : g.alpha) a = rng.small_rat();
      for (auto& t : g.torus) t = rng.nonzero_rat();
      const Point x = X.to_point(g);
      CHECK(X.from_point(x) == g);
      CHECK(X.to_point(X.from_point(x)) == x);
    }
  }

  SUBCASE("alpha coordinates evaluate the negated first roots") {
    for (int s = 0; s < 20; ++s) {
      const Point x = random_invertible_point(X, rng);
      const GroupElement g = X.from_point(x);
      for (std::size_t r = 0; r < X.unipotent_rank(); ++r)
        CHECK(g.alpha[r] == X.evaluate_local(x, negate(X.roots().pairs[r].e1.vector)));
    }
  }
}

TEST_CASE("activeness and commutativity") {
  CHECK_FALSE(affine_instance_1().is_active());
  CHECK(affine_instance_2().is_active());
  CHECK(torus_only_monoid().is_active());
  CHECK(torus_only_monoid().is_commutative());

  const RootMonoid zero_diff = affine_space_monoid(3, 2, {Vec{1}, Vec{2}}, {Vec{1}, Vec{2}});
  CHECK_FALSE(zero_diff.is_active());
  CHECK(zero_diff.is_commutative());

  Rng rng(47);
  for (int s = 0; s < 50; ++s) {
    const Point x = random_point(zero_diff, rng), y = random_point(zero_diff, rng);
    CHECK(zero_diff.multiply(x, y) == zero_diff.multiply(y, x));
  }

  CHECK_FALSE(quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3}).is_commutative());
}

TEST_CASE("associativity") {
  Rng rng(53);
  std::vector<RootMonoid> monoids;
  monoids.push_back(affine_instance_1());
  monoids.push_back(affine_instance_2());
  monoids.push_back(quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3}));
  monoids.push_back(torus_only_monoid());

  for (const auto& X : monoids) {
    for (int s = 0; s < 100; ++s) {
      const Point x = random_point(X, rng), y = random_point(X, rng), z = random_point(X, rng);
      CHECK(X.multiply(X.multiply(x, y), z) == X.multiply(x, X.multiply(y, z)));
    }
  }

  SUBCASE("random monoid instances") {
    for (int inst = 0; inst < 5; ++inst) {
      const std::size_t n = static_cast<std::size_t>(rng.uniform(2, 5));
      const std::size_t k = static_cast<std::size_t>(rng.uniform(0, std::min<long>(3, static_cast<long>(n) - 1)));
      const auto cf = random_cone_with_regular_face(n, k, rng);
      const auto roots = compatible_pairs_with_differences(cf.sigma, cf.tau, random_differences(cf.sigma, cf.tau, rng));
      const RootMonoid X = RootMonoid::build(cf.sigma, cf.tau, roots);
      for (int s = 0; s < 30; ++s) {
        const Point x = random_point(X, rng), y = random_point(X, rng), z = random_point(X, rng);
        CHECK(X.multiply(X.multiply(x, y), z) == X.multiply(x, X.multiply(y, z)));
      }
    }
  }
}

TEST_CASE("build is deterministic") {
  const RootMonoid a = quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3});
  const RootMonoid b = quadric_cylinder_monoid(CylinderParams{1, 1, 0, 2, 0, 1, 2, 3});
  CHECK(a.semigroup().generators == b.semigroup().generators);
  CHECK(a.neutral() == b.neutral());
  CHECK(a.characters() == b.characters());
}

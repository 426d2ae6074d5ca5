#include <doctest.h>

#include <cmath>

#include "mudom/disc_automorphism.hpp"
#include "mudom/rng.hpp"

using namespace mudom;

namespace {
const Complex kProbes[] = {{0, 0}, {0.5, 0}, {-0.5, 0}, {0, 0.5}, {0, -0.5}, {0.3, 0.4}};

DiscAutomorphism random_aut(Rng& rng, double rmax = 0.9) {
  return DiscAutomorphism::make(rng.unimodular(), rng.in_disc(rmax));
}

double probe_distance(const DiscAutomorphism& a, const DiscAutomorphism& b) {
  double worst = 0.0;
  for (const Complex z : kProbes)
    worst = std::max(worst, std::abs(aut_eval(a, z) - aut_eval(b, z)));
  return worst;
}
}  // namespace

TEST_CASE("blaschke_factor basics") {
  const Complex alpha{0.3, 0.1};
  CHECK(std::abs(blaschke_factor(alpha, alpha)) < 1e-15);

  // alpha = 0 reduces B to z -> -z
  const Complex z{0.3, 0.4};
  CHECK(std::abs(blaschke_factor(Complex{}, z) - (-z)) < 1e-15);

  for (const double theta : {0.1, 1.0, 2.5}) {
    const Complex w = blaschke_factor(Complex{0.5, 0.0}, std::polar(1.0, theta));
    CHECK(std::abs(std::abs(w) - 1.0) < 1e-12);
  }

  CHECK_THROWS_AS(blaschke_factor(Complex{0.5, 0.0}, Complex{2.0, 0.0}),
                  DegenerateDenominator);
}

TEST_CASE("aut_eval basics") {
  const auto id = DiscAutomorphism::identity();
  const Complex z{0.2, 0.7};
  CHECK(std::abs(aut_eval(id, z) - z) < 1e-15);

  const auto neg = DiscAutomorphism::make(Complex{1.0, 0.0}, Complex{});
  CHECK(std::abs(aut_eval(neg, Complex{0.0, 1.0}) - Complex{0.0, -1.0}) < 1e-15);

  // hand value: -B_{0.5}(1) = (1 - 0.5)/(1 - 0.5) = 1
  const auto v = DiscAutomorphism::make(Complex{-1.0, 0.0}, Complex{0.5, 0.0});
  CHECK(std::abs(aut_eval(v, Complex{1.0, 0.0}) - Complex{1.0, 0.0}) < 1e-14);
}

TEST_CASE("make validates parameters") {
  CHECK_THROWS_AS(DiscAutomorphism::make(Complex{0.5, 0.0}, Complex{}), InvalidParameter);
  CHECK_THROWS_AS(DiscAutomorphism::make(Complex{1.0, 0.0}, Complex{1.0, 0.0}),
                  InvalidParameter);
}

TEST_CASE("aut_compose") {
  Rng rng(11);
  const auto w = random_aut(rng);
  CHECK(probe_distance(aut_compose(DiscAutomorphism::identity(), w), w) < 1e-12);

  for (int i = 0; i < 200; ++i) {
    const auto v = random_aut(rng);
    const auto u = aut_compose(v, aut_inverse(v));
    CHECK(probe_distance(u, DiscAutomorphism::identity()) < 1e-12);
  }

  // (-z) composed with (-z) is the identity
  const auto neg = DiscAutomorphism::make(Complex{1.0, 0.0}, Complex{});
  CHECK(probe_distance(aut_compose(neg, neg), DiscAutomorphism::identity()) < 1e-15);

  // compose really is "v after w" on the probe set
  for (int i = 0; i < 200; ++i) {
    const auto v = random_aut(rng);
    const auto u = random_aut(rng);
    const auto vu = aut_compose(v, u);
    double worst = 0.0;
    for (const Complex z : kProbes)
      worst = std::max(worst, std::abs(aut_eval(vu, z) - aut_eval(v, aut_eval(u, z))));
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("aut_inverse") {
  const auto id = DiscAutomorphism::identity();
  const auto id_inv = aut_inverse(id);
  CHECK(std::abs(id_inv.eta - id.eta) < 1e-15);
  CHECK(std::abs(id_inv.alpha - id.alpha) < 1e-15);

  // eta = +1 makes v = B_alpha itself, an involution: inverse has the same
  // parameters.
  const auto b = DiscAutomorphism::make(Complex{1.0, 0.0}, Complex{0.5, 0.0});
  const auto b_inv = aut_inverse(b);
  CHECK(std::abs(b_inv.eta - b.eta) < 1e-15);
  CHECK(std::abs(b_inv.alpha - b.alpha) < 1e-15);

  // eta = -1: the round trip is the contract (the inverse parameters differ,
  // (-1, a) maps to (-1, -a)).
  const auto v = DiscAutomorphism::make(Complex{-1.0, 0.0}, Complex{0.5, 0.0});
  CHECK(probe_distance(aut_compose(v, aut_inverse(v)), id) < 1e-12);
  CHECK(std::abs(aut_inverse(v).alpha + v.alpha) < 1e-15);

  const auto rot = DiscAutomorphism::make(Complex{1.0, 0.0}, Complex{});
  CHECK(std::abs(aut_inverse(rot).eta - rot.eta) < 1e-15);
}

TEST_CASE("two_point_boundary_aut") {
  const Complex i{0.0, 1.0};

  SUBCASE("fixing both points") {
    const auto v = two_point_boundary_aut({i, -i}, {i, -i});
    CHECK(std::abs(aut_eval(v, i) - i) < 1e-10);
    CHECK(std::abs(aut_eval(v, -i) + i) < 1e-10);
  }

  SUBCASE("(i,-i) to (1,-1)") {
    const auto v = two_point_boundary_aut({i, -i}, {Complex{1, 0}, Complex{-1, 0}});
    CHECK(std::abs(aut_eval(v, i) - 1.0) < 1e-10);
    CHECK(std::abs(aut_eval(v, -i) + 1.0) < 1e-10);
  }

  SUBCASE("200 random target pairs") {
    Rng rng(5);
    for (int k = 0; k < 200; ++k) {
      const Complex t1 = rng.unimodular();
      Complex t2 = rng.unimodular();
      if (std::abs(t1 - t2) < 1e-6) t2 = -t1;
      const auto v = two_point_boundary_aut({i, -i}, {t1, t2});
      CHECK(std::abs(aut_eval(v, i) - t1) < 1e-10);
      CHECK(std::abs(aut_eval(v, -i) - t2) < 1e-10);
      CHECK(std::abs(v.alpha) < 1.0);
    }
  }

  SUBCASE("coincident points rejected") {
    CHECK_THROWS_AS(two_point_boundary_aut({i, i}, {Complex{1, 0}, Complex{-1, 0}}),
                    CoincidentPoints);
    CHECK_THROWS_AS(two_point_boundary_aut({i, -i}, {Complex{1, 0}, Complex{1, 0}}),
                    CoincidentPoints);
  }
}

TEST_CASE("module invariants") {
  Rng rng(17);

  SUBCASE("B_alpha is an involution") {
    for (int k = 0; k < 300; ++k) {
      const Complex alpha = rng.in_disc(0.95);
      const Complex z = (k % 2 == 0) ? rng.in_disc() : rng.unimodular();
      CHECK(std::abs(blaschke_factor(alpha, blaschke_factor(alpha, z)) - z) < 1e-12);
    }
  }

  SUBCASE("boundary preservation and the orbit of 1") {
    for (int k = 0; k < 300; ++k) {
      const auto v = random_aut(rng, 0.95);
      CHECK(std::abs(std::abs(aut_eval(v, rng.unimodular())) - 1.0) < 1e-12);
      CHECK(std::abs(std::abs(aut_eval(v, Complex{1.0, 0.0})) - 1.0) < 1e-12);
    }
  }

  SUBCASE("associativity on the probe set") {
    for (int k = 0; k < 200; ++k) {
      const auto a = random_aut(rng);
      const auto b = random_aut(rng);
      const auto c = random_aut(rng);
      CHECK(probe_distance(aut_compose(aut_compose(a, b), c),
                           aut_compose(a, aut_compose(b, c))) < 1e-11);
    }
  }
}

#include <doctest.h>

#include <cmath>

#include "mudom/orbits.hpp"

using namespace mudom;

TEST_CASE("decompose_b_gamma2") {
  SUBCASE("(0,1) is non-royal") {
    const auto d = decompose_b_gamma2({Complex{0, 0}, Complex{1, 0}});
    CHECK(d.stratum == DecompositionStratum::NonRoyalGamma2);
    CHECK(d.residual < 1e-10);
  }

  SUBCASE("(0,-1) through roots {1,-1}") {
    const auto d = decompose_b_gamma2({Complex{0, 0}, Complex{-1, 0}});
    CHECK(d.stratum == DecompositionStratum::NonRoyalGamma2);
    CHECK(d.residual < 1e-10);
    const auto& v = std::get<DiscAutomorphism>(d.params);
    const auto image = tau_apply(v, canonical_gamma2(false));
    CHECK(std::abs(image.s) < 1e-10);
    CHECK(std::abs(image.p + 1.0) < 1e-10);
  }

  SUBCASE("(-2,1) is royal") {
    const auto d = decompose_b_gamma2({Complex{-2, 0}, Complex{1, 0}});
    CHECK(d.stratum == DecompositionStratum::RoyalGamma2);
    CHECK(d.residual < 1e-10);
    const auto& v = std::get<DiscAutomorphism>(d.params);
    const auto image = tau_apply(v, canonical_gamma2(true));
    CHECK(std::abs(image.s + 2.0) < 1e-10);
    CHECK(std::abs(image.p - 1.0) < 1e-10);
  }

  SUBCASE("interior input rejected") {
    CHECK_THROWS_AS(decompose_b_gamma2({Complex{0.5, 0}, Complex{0, 0}}), NotOnBoundary);
  }
}

TEST_CASE("decompose_b_tetra") {
  SUBCASE("(0,0,e^{i theta})") {
    const Complex x3 = std::polar(1.0, 1.3);
    const auto d = decompose_b_tetra({0, 0, x3});
    CHECK(d.stratum == DecompositionStratum::NonTriangularE);
    const auto& t = std::get<TetraAutParams>(d.params);
    CHECK(std::abs(t.xi1 - x3) < 1e-12);
    CHECK(std::abs(t.z1) < 1e-15);
    CHECK(d.residual < 1e-12);
  }

  SUBCASE("(0.5, 0.5, 1)") {
    const auto d = decompose_b_tetra({Complex{0.5, 0}, Complex{0.5, 0}, Complex{1, 0}});
    CHECK(d.stratum == DecompositionStratum::NonTriangularE);
    const auto& t = std::get<TetraAutParams>(d.params);
    CHECK(std::abs(t.z1 + 0.5) < 1e-12);
    CHECK(d.residual < 1e-12);
  }

  SUBCASE("(1,-1,-1) is triangular") {
    const auto d = decompose_b_tetra({Complex{1, 0}, Complex{-1, 0}, Complex{-1, 0}});
    CHECK(d.stratum == DecompositionStratum::TriangularE);
    const auto& t = std::get<TetraAutParams>(d.params);
    CHECK(std::abs(t.xi1 - 1.0) < 1e-12);
    CHECK(std::abs(t.xi2 + 1.0) < 1e-12);
    CHECK(d.residual < 1e-12);
  }

  SUBCASE("off-boundary input rejected") {
    CHECK_THROWS_AS(decompose_b_tetra({Complex{0.5, 0}, Complex{0.2, 0}, Complex{0.5, 0}}),
                    NotOnBoundary);
  }
}

TEST_CASE("decompose_b_penta") {
  SUBCASE("(0,2,1) is royal with omega pinned to 1") {
    const auto d = decompose_b_penta({0, 2, 1});
    CHECK(d.stratum == DecompositionStratum::RoyalP);
    const auto& f = std::get<PentaAutParams>(d.params);
    CHECK(std::abs(f.omega - 1.0) < 1e-15);
    CHECK(d.residual < 1e-12);
  }

  SUBCASE("(1,0,1) is non-royal") {
    const auto d = decompose_b_penta({1, 0, 1});
    CHECK(d.stratum == DecompositionStratum::NonRoyalP);
    CHECK(d.residual < 1e-10);
    const auto& f = std::get<PentaAutParams>(d.params);
    CHECK(std::abs(std::abs(f.omega) - 1.0) < 1e-12);
  }

  SUBCASE("(i,0,1) differs from (1,0,1) only through omega") {
    const auto d = decompose_b_penta({Complex{0, 1}, Complex{0, 0}, Complex{1, 0}});
    CHECK(d.stratum == DecompositionStratum::NonRoyalP);
    CHECK(d.residual < 1e-10);
  }

  SUBCASE("off-boundary input rejected") {
    CHECK_THROWS_AS(decompose_b_penta({Complex{0.5, 0}, Complex{0, 0}, Complex{1, 0}}),
                    NotOnBoundary);
  }
}

TEST_CASE("decompose_b_gamma_n") {
  SUBCASE("canonical point itself") {
    for (int n = 2; n <= 5; ++n) {
      const auto d = decompose_b_gamma_n(canonical_gamma_n(n));
      CHECK(d.stratum == DecompositionStratum::BGammaN);
      CHECK(d.residual < 1e-10);
    }
  }

  SUBCASE("n = 2 at (0,-1)") {
    const auto d = decompose_b_gamma_n(GammaNPoint{{Complex{0, 0}, Complex{-1, 0}}});
    CHECK(d.residual < 1e-8);
  }

  SUBCASE("random boundary points, n = 3") {
    Rng rng(97);
    for (int t = 0; t < 25; ++t) {
      const auto c = sample_b_gamma_n(rng, 3);
      const auto d = decompose_b_gamma_n(c);
      CHECK(d.residual < 1e-7);
      const auto& B = std::get<BlaschkeProduct>(d.params);
      CHECK(B.degree() <= 3);
    }
  }

  SUBCASE("interior input rejected") {
    Rng rng(101);
    CHECK_THROWS_AS(decompose_b_gamma_n(sample_gamma_n_interior(rng, 3)), NotOnBoundary);
  }
}

TEST_CASE("decomposition stratum always matches the classifier") {
  Rng rng(103);
  for (int t = 0; t < 400; ++t) {
    const bool flag = t % 2 == 0;

    const auto q = sample_b_gamma2(rng, flag);
    CHECK(decompose_b_gamma2(q).stratum ==
          (flag ? DecompositionStratum::RoyalGamma2 : DecompositionStratum::NonRoyalGamma2));

    const auto x = sample_b_tetra(rng, flag);
    CHECK(decompose_b_tetra(x).stratum ==
          (flag ? DecompositionStratum::TriangularE : DecompositionStratum::NonTriangularE));

    const auto w = sample_b_penta(rng, flag);
    const auto d = decompose_b_penta(w);
    CHECK(d.stratum == (flag ? DecompositionStratum::RoyalP : DecompositionStratum::NonRoyalP));
    if (flag) {
      const auto image = penta_apply(std::get<PentaAutParams>(d.params), canonical_penta(true));
      CHECK(std::abs(image.a) == 0.0);
    }
  }
}

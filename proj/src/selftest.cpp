#include "mudom/selftest.hpp"

#include <cmath>
#include <functional>
#include <sstream>

#include "mudom/mu.hpp"
#include "mudom/orbits.hpp"

namespace mudom {

namespace {

struct Runner {
  SelftestReport report;

  void check(const std::string& name, const std::function<std::string()>& body) {
    SelftestCheck c;
    c.name = name;
    try {
      c.detail = body();  // empty detail means pass
      c.ok = c.detail.empty();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = e.what();
    }
    report.checks.push_back(std::move(c));
  }
};

std::string fail(const std::string& msg, double value) {
  std::ostringstream os;
  os << msg << " (" << value << ")";
  return os.str();
}

DiscAutomorphism random_aut(Rng& rng) {
  return DiscAutomorphism::make(rng.unimodular(), rng.in_disc(0.9));
}

TetraAutParams random_tetra_params(Rng& rng, bool with_flip = true) {
  return TetraAutParams::make(rng.unimodular(), rng.in_disc(0.9), rng.unimodular(),
                              rng.in_disc(0.9), with_flip && rng.uniform() < 0.5);
}

PentaAutParams random_penta_params(Rng& rng) {
  return PentaAutParams::make(rng.unimodular(), random_aut(rng));
}

}  // namespace

SelftestReport run_selftest(int samples, std::uint64_t seed) {
  Runner r;
  const int n_cheap = std::max(samples, 10);
  const int n_mid = std::max(samples / 10, 5);
  const int n_mu = std::max(samples / 20, 3);
  const int n_interp = std::max(samples / 100, 2);

  r.check("disc_automorphism_group_laws", [&]() -> std::string {
    Rng rng(seed + 1);
    const Complex probes[] = {{0, 0}, {0.5, 0}, {-0.5, 0}, {0, 0.5}, {0, -0.5}, {0.3, 0.4}};
    for (int i = 0; i < n_cheap; ++i) {
      const auto v = random_aut(rng);
      const auto w = random_aut(rng);
      const auto vw = aut_compose(v, w);
      const auto inv = aut_inverse(v);
      for (const Complex z : probes) {
        const double e1 = std::abs(aut_eval(vw, z) - aut_eval(v, aut_eval(w, z)));
        const double e2 = std::abs(aut_eval(inv, aut_eval(v, z)) - z);
        if (e1 > 1e-11) return fail("compose mismatch", e1);
        if (e2 > 1e-11) return fail("inverse mismatch", e2);
      }
    }
    return {};
  });

  r.check("blaschke_boundary_modulus", [&]() -> std::string {
    Rng rng(seed + 2);
    for (int i = 0; i < n_cheap; ++i) {
      std::vector<Complex> zeros;
      const int d = 1 + static_cast<int>(rng.uniform() * 3.0);
      for (int k = 0; k < d; ++k) zeros.push_back(rng.in_disc(0.9));
      const auto B = BlaschkeProduct::make(rng.unimodular(), std::move(zeros));
      const double m = std::abs(blaschke_eval(B, rng.unimodular()));
      if (std::abs(m - 1.0) > 1e-10) return fail("off the circle", m);
    }
    return {};
  });

  r.check("gamma2_classifier_agreement", [&]() -> std::string {
    Rng rng(seed + 3);
    for (int i = 0; i < n_cheap; ++i) {
      Gamma2Point q;
      if (i % 2 == 0) q = sample_b_gamma2(rng, i % 4 == 0);
      else q = {4.0 * rng.in_disc(), 2.0 * rng.in_disc()};
      const bool root_test = classify_gamma_n(GammaNPoint{{q.s, q.p}}).on_boundary;
      const bool algebraic = on_b_gamma2_algebraic(q);
      if (root_test != algebraic) return "root/algebraic boundary tests disagree";
    }
    return {};
  });

  r.check("sampler_classifier_round_trip", [&]() -> std::string {
    Rng rng(seed + 4);
    for (int i = 0; i < n_mid; ++i) {
      if (classify_gamma2(sample_b_gamma2(rng, false)).on_boundary == false)
        return "bGamma2 sample off the boundary";
      if (!royal_gamma2(sample_b_gamma2(rng, true)))
        return "royal sample not royal";
      if (classify_b_tetra(sample_b_tetra(rng, false)).label !=
          TetraBoundaryLabel::BoundaryNonTriangular)
        return "non-triangular sample mislabeled";
      if (classify_b_tetra(sample_b_tetra(rng, true)).label !=
          TetraBoundaryLabel::BoundaryTriangular)
        return "triangular sample mislabeled";
      if (classify_b_penta(sample_b_penta(rng, false)).label !=
          PentaBoundaryLabel::BoundaryNonRoyal)
        return "non-royal pentablock sample mislabeled";
      if (classify_b_penta(sample_b_penta(rng, true)).label !=
          PentaBoundaryLabel::BoundaryRoyal)
        return "royal pentablock sample mislabeled";
      if (!classify_gamma_n(sample_b_gamma_n(rng, 3)).on_boundary)
        return "bGammaN sample off the boundary";
    }
    return {};
  });

  r.check("orbit_decompositions", [&]() -> std::string {
    Rng rng(seed + 5);
    for (int i = 0; i < n_mid; ++i) {
      double res = decompose_b_gamma2(sample_b_gamma2(rng, i % 2 == 0)).residual;
      if (res > 1e-8) return fail("gamma2 residual", res);
      res = decompose_b_tetra(sample_b_tetra(rng, i % 2 == 0)).residual;
      if (res > 1e-8) return fail("tetra residual", res);
      res = decompose_b_penta(sample_b_penta(rng, i % 2 == 0)).residual;
      if (res > 1e-8) return fail("penta residual", res);
    }
    return {};
  });

  r.check("automorphism_invariance", [&]() -> std::string {
    Rng rng(seed + 6);
    for (int i = 0; i < n_mid; ++i) {
      const bool royal = i % 2 == 0;
      const auto q2 = tau_apply(random_aut(rng), sample_b_gamma2(rng, royal));
      if (!classify_gamma2(q2, 1e-8).on_boundary) return "tau left bGamma2";
      if (royal_gamma2(q2, 1e-8) != royal) return "tau broke the royal flag";

      const bool tri = i % 2 == 1;
      const auto x = tetra_apply(random_tetra_params(rng), sample_b_tetra(rng, tri));
      const auto label = classify_b_tetra(x, 1e-8).label;
      if (label != (tri ? TetraBoundaryLabel::BoundaryTriangular
                        : TetraBoundaryLabel::BoundaryNonTriangular))
        return "T_{v,chi} broke the boundary stratum";

      const auto qp = penta_apply(random_penta_params(rng), sample_b_penta(rng, royal));
      const auto plabel = classify_b_penta(qp, 1e-8).label;
      if (plabel != (royal ? PentaBoundaryLabel::BoundaryRoyal
                           : PentaBoundaryLabel::BoundaryNonRoyal))
        return "f_{omega v} broke the boundary stratum";
    }
    return {};
  });

  r.check("tetra_canonical_point_facts", [&]() -> std::string {
    Rng rng(seed + 7);
    for (int i = 0; i < n_mid; ++i) {
      const auto t = random_tetra_params(rng, false);
      const auto y = tetra_apply(t, TetraPoint{0.0, 0.0, 1.0});
      if (std::abs(std::abs(y.x3) - 1.0) > 1e-10)
        return fail("third coordinate not unimodular", std::abs(y.x3));
      if (!(std::abs(y.x1) < 1.0)) return fail("first coordinate reached the circle", std::abs(y.x1));
    }
    return {};
  });

  r.check("mu_bracket_ordering", [&]() -> std::string {
    Rng rng(seed + 8);
    for (int i = 0; i < n_mu; ++i) {
      const Mat2 A = sample_contraction(rng);
      const double rad = spectral_radius(A);
      const double nrm = op_norm(A);
      for (const MuStructure st : {MuStructure::Diag, MuStructure::PentaSpan}) {
        const MuBracket b = mu(A, st);
        if (b.lower < rad - 1e-4) return fail("bracket below spectral radius", b.lower - rad);
        if (b.upper > nrm + 1e-4) return fail("bracket above operator norm", b.upper - nrm);
      }
    }
    return {};
  });

  r.check("mu_membership_consistency", [&]() -> std::string {
    Rng rng(seed + 9);
    for (int i = 0; i < n_mu; ++i) {
      const Mat2 A = sample_contraction(rng);
      if (in_tetra(project_tetra(A)) == Membership::Outside)
        return "projected tetrablock point classified outside";
      if (in_penta(project_penta(A)) == Membership::Outside)
        return "projected pentablock point classified outside";
    }
    return {};
  });

  r.check("blaschke_interpolation", [&]() -> std::string {
    Rng rng(seed + 10);
    for (int n = 2; n <= 4; ++n) {
      for (int i = 0; i < n_interp; ++i) {
        std::vector<Complex> targets(n);
        for (auto& t : targets) t = rng.unimodular();
        const auto B = interpolate_roots_of_unity(targets);
        const double res = interpolation_residual(B, targets);
        if (res > 1e-8) return fail("interpolation residual", res);
      }
    }
    return {};
  });

  r.report.passed = true;
  for (const auto& c : r.report.checks) r.report.passed = r.report.passed && c.ok;
  return r.report;
}

}  // namespace mudom

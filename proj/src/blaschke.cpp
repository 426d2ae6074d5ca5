#include "mudom/blaschke.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

#include "mudom/disc_automorphism.hpp"
#include "mudom/rng.hpp"

namespace mudom {

BlaschkeProduct BlaschkeProduct::make(Complex unimodular, std::vector<Complex> zeros) {
  const double m = std::abs(unimodular);
  if (std::abs(m - 1.0) > 1e-9)
    throw InvalidParameter("BlaschkeProduct: constant must be unimodular");
  for (const Complex a : zeros)
    if (!(std::abs(a) < 1.0))
      throw InvalidParameter("BlaschkeProduct: zeros must lie in the open disc");
  BlaschkeProduct B;
  B.unimodular = unimodular / m;
  B.zeros = std::move(zeros);
  return B;
}

Complex blaschke_eval(const BlaschkeProduct& B, Complex z) {
  Complex w = B.unimodular;
  for (const Complex a : B.zeros) w *= blaschke_factor(a, z);
  return w;
}

std::vector<Complex> roots_of_unity(int n) {
  if (n < 1) throw InvalidParameter("roots_of_unity: n must be >= 1");
  std::vector<Complex> mu(n);
  for (int k = 0; k < n; ++k)
    mu[k] = std::polar(1.0, 2.0 * M_PI * static_cast<double>(k) / n);
  return mu;
}

double interpolation_residual(const BlaschkeProduct& B, std::span<const Complex> targets) {
  const auto mu = roots_of_unity(static_cast<int>(targets.size()));
  double worst = 0.0;
  for (std::size_t j = 0; j < targets.size(); ++j)
    worst = std::max(worst, std::abs(blaschke_eval(B, mu[j]) - targets[j]));
  return worst;
}

namespace {

// One Levenberg-Marquardt descent on the chordal residuals
// B(mu_j) - t_j over parameters (theta, Re a_1, Im a_1, ...), with
// B = e^{i theta} prod (z - a_k)/(conj(a_k) z - 1). Zeros are clamped to
// radius 0.995 after every step; outside-disc optima then stall and the
// caller escalates the degree instead.
struct Stage {
  const std::vector<Complex>& nodes;
  std::span<const Complex> targets;

  double theta = 0.0;
  std::vector<Complex> zeros;

  Complex value(Complex z) const {
    Complex w = std::polar(1.0, theta);
    for (const Complex a : zeros) w *= (z - a) / (std::conj(a) * z - 1.0);
    return w;
  }

  Eigen::VectorXd residuals() const {
    const int n = static_cast<int>(nodes.size());
    Eigen::VectorXd r(2 * n);
    for (int j = 0; j < n; ++j) {
      const Complex d = value(nodes[j]) - targets[j];
      r(j) = d.real();
      r(n + j) = d.imag();
    }
    return r;
  }

  Eigen::MatrixXd jacobian() const {
    const int n = static_cast<int>(nodes.size());
    const int d = static_cast<int>(zeros.size());
    Eigen::MatrixXd J(2 * n, 1 + 2 * d);
    for (int j = 0; j < n; ++j) {
      const Complex z = nodes[j];
      const Complex B = value(z);
      const Complex dth = Complex{0.0, 1.0} * B;
      J(j, 0) = dth.real();
      J(n + j, 0) = dth.imag();
      for (int k = 0; k < d; ++k) {
        const Complex a = zeros[k];
        const Complex da = -1.0 / (z - a);                    // d log f / d a
        const Complex dab = -z / (std::conj(a) * z - 1.0);    // d log f / d conj(a)
        const Complex dx = B * (da + dab);
        const Complex dy = B * (Complex{0.0, 1.0} * (da - dab));
        J(j, 1 + 2 * k) = dx.real();
        J(n + j, 1 + 2 * k) = dx.imag();
        J(j, 2 + 2 * k) = dy.real();
        J(n + j, 2 + 2 * k) = dy.imag();
      }
    }
    return J;
  }

  double max_residual() const {
    double worst = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j)
      worst = std::max(worst, std::abs(value(nodes[j]) - targets[j]));
    return worst;
  }

  void run(int max_iter) {
    double lambda = 1e-3;
    Eigen::VectorXd r = residuals();
    double cost = r.squaredNorm();
    for (int it = 0; it < max_iter; ++it) {
      const Eigen::MatrixXd J = jacobian();
      const Eigen::MatrixXd H = J.transpose() * J;
      const Eigen::VectorXd g = J.transpose() * r;
      const int dim = static_cast<int>(H.rows());
      const Eigen::VectorXd step =
          (H + lambda * Eigen::MatrixXd::Identity(dim, dim)).ldlt().solve(-g);
      Stage trial = *this;
      trial.theta += step(0);
      for (std::size_t k = 0; k < zeros.size(); ++k) {
        Complex a = zeros[k] + Complex{step(1 + 2 * k), step(2 + 2 * k)};
        const double m = std::abs(a);
        if (m >= 0.995) a *= 0.995 / m;
        trial.zeros[k] = a;
      }
      const Eigen::VectorXd r2 = trial.residuals();
      const double c2 = r2.squaredNorm();
      if (c2 < cost) {
        theta = trial.theta;
        zeros = trial.zeros;
        r = r2;
        cost = c2;
        lambda = std::max(lambda * 0.3, 1e-12);
        if (cost < 1e-26) break;
      } else {
        lambda *= 10.0;
        if (lambda > 1e10) break;
      }
    }
  }
};

}  // namespace

BlaschkeProduct interpolate_roots_of_unity(std::span<const Complex> targets,
                                           double accept_tol, std::uint64_t seed) {
  const int n = static_cast<int>(targets.size());
  if (n < 1) throw InvalidParameter("interpolate_roots_of_unity: empty target list");
  for (const Complex t : targets)
    if (std::abs(std::abs(t) - 1.0) > 1e-9)
      throw InvalidParameter("interpolate_roots_of_unity: targets must be unimodular");

  const auto nodes = roots_of_unity(n);
  Rng jitter(seed);
  double best_residual = std::numeric_limits<double>::infinity();

  for (int d = 0; d <= n; ++d) {
    if (d == 0) {
      // Chordal mean of the targets gives the optimal constant.
      Complex w{0.0, 0.0};
      for (const Complex t : targets) w += t;
      if (std::abs(w) > 1e-12) {
        const BlaschkeProduct B = BlaschkeProduct::constant(w / std::abs(w));
        const double res = interpolation_residual(B, targets);
        best_residual = std::min(best_residual, res);
        if (res < accept_tol) return B;
      }
      continue;
    }
    for (int restart = 0; restart < 8; ++restart) {
      Stage stage{nodes, targets, 0.0, {}};
      stage.zeros.resize(d);
      const double offset = 2.0 * M_PI * restart / 8.0;
      for (int k = 0; k < d; ++k) {
        const double ang = 2.0 * M_PI * k / d + offset + 0.05 * jitter.uniform();
        stage.zeros[k] = std::polar(0.5, ang);
      }
      // Start theta so the first node interpolates exactly.
      stage.theta = std::arg(targets[0]) - std::arg(stage.value(nodes[0]));
      stage.run(150);
      const double res = stage.max_residual();
      best_residual = std::min(best_residual, res);
      if (res < accept_tol) {
        std::vector<Complex> zeros = stage.zeros;
        for (Complex& a : zeros)
          if (std::abs(a) >= 1.0) a *= 0.9999999 / std::abs(a);
        return BlaschkeProduct::make(std::polar(1.0, stage.theta), std::move(zeros));
      }
    }
  }
  throw InterpolationFailure("interpolate_roots_of_unity: no stage reached tolerance",
                             best_residual);
}

}  // namespace mudom

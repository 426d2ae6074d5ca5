#include "mudom/disc_automorphism.hpp"

#include <array>
#include <cmath>

namespace mudom {

namespace {

constexpr double kCircleTol = 1e-9;

Complex require_unimodular(Complex w, const char* what) {
  const double m = std::abs(w);
  if (std::abs(m - 1.0) > kCircleTol)
    throw InvalidParameter(std::string(what) + ": expected a unimodular value");
  return w / m;
}

// Coefficient matrix [[a, b], [c, d]] of z -> (a z + b)/(c z + d).
struct Mobius {
  Complex a, b, c, d;

  Complex operator()(Complex z) const { return (a * z + b) / (c * z + d); }

  Mobius after(const Mobius& m) const {
    return {a * m.a + b * m.c, a * m.b + b * m.d,
            c * m.a + d * m.c, c * m.b + d * m.d};
  }

  Mobius inverse() const { return {d, -b, -c, a}; }

  void rescale() {
    const double m = std::max(std::max(std::abs(a), std::abs(b)),
                              std::max(std::abs(c), std::abs(d)));
    if (m > 0.0) { a /= m; b /= m; c /= m; d /= m; }
  }
};

Mobius as_mobius(const DiscAutomorphism& v) {
  return {v.eta, -v.eta * v.alpha, std::conj(v.alpha), Complex{-1.0, 0.0}};
}

// alpha is the zero of the map; eta follows from matching the denominator
// against (a/eta)(conj(alpha) z - 1).
DiscAutomorphism canonicalize(const Mobius& m) {
  const Complex alpha = -m.b / m.a;
  const Complex eta = -m.a / m.d;
  return DiscAutomorphism::make(eta, alpha);
}

// Moebius map with f(p1) = 0, f(p2) = inf, f(p3) = 1.
Mobius through_triple(Complex p1, Complex p2, Complex p3) {
  return {p3 - p2, -p1 * (p3 - p2), p3 - p1, -p2 * (p3 - p1)};
}

}  // namespace

DiscAutomorphism DiscAutomorphism::make(Complex eta, Complex alpha) {
  DiscAutomorphism v;
  v.eta = require_unimodular(eta, "eta");
  if (!(std::abs(alpha) < 1.0))
    throw InvalidParameter("alpha must lie in the open disc");
  v.alpha = alpha;
  return v;
}

DiscAutomorphism DiscAutomorphism::rotation(Complex t) {
  return make(-t, Complex{0.0, 0.0});
}

Complex blaschke_factor(Complex alpha, Complex z) {
  const Complex den = std::conj(alpha) * z - 1.0;
  if (std::abs(den) < 1e-14)
    throw DegenerateDenominator("blaschke_factor: conj(alpha) z == 1");
  return (z - alpha) / den;
}

Complex aut_eval(const DiscAutomorphism& v, Complex z) {
  return v.eta * blaschke_factor(v.alpha, z);
}

DiscAutomorphism aut_compose(const DiscAutomorphism& v, const DiscAutomorphism& w) {
  Mobius m = as_mobius(v).after(as_mobius(w));
  m.rescale();
  return canonicalize(m);
}

DiscAutomorphism aut_inverse(const DiscAutomorphism& v) {
  // Matrix inverse of [[eta, -eta alpha], [conj alpha, -1]], renormalized.
  return DiscAutomorphism::make(std::conj(v.eta), v.eta * v.alpha);
}

DiscAutomorphism two_point_boundary_aut(std::pair<Complex, Complex> sources,
                                        std::pair<Complex, Complex> targets) {
  const auto [s1, s2] = sources;
  const auto [t1, t2] = targets;
  for (const Complex w : {s1, s2, t1, t2}) require_unimodular(w, "boundary point");
  if (std::abs(s1 - s2) < 1e-12 || std::abs(t1 - t2) < 1e-12)
    throw CoincidentPoints("two_point_boundary_aut: coincident points");

  const Complex ms = std::sqrt(s1 * s2);
  const Complex mt = std::sqrt(t1 * t2);
  const Mobius src = through_triple(s1, s2, ms);

  for (const Complex mid : {mt, -mt}) {
    Mobius m = through_triple(t1, t2, mid).inverse().after(src);
    m.rescale();
    const Complex at_zero = m.b / m.d;
    if (std::abs(at_zero) < 1.0) {
      DiscAutomorphism v = canonicalize(m);
      if (std::abs(aut_eval(v, s1) - t1) > 1e-10 ||
          std::abs(aut_eval(v, s2) - t2) > 1e-10)
        throw InternalInconsistency("two_point_boundary_aut: residual too large");
      return v;
    }
  }
  throw InternalInconsistency("two_point_boundary_aut: no disc-preserving branch");
}

}  // namespace mudom

#include "mudom/mu.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <functional>
#include <limits>
#include <vector>

#include "mudom/domains.hpp"

namespace mudom {

std::string to_string(MuStructure s) {
  switch (s) {
    case MuStructure::Full: return "full";
    case MuStructure::Scalar: return "scalar";
    case MuStructure::Diag: return "diag";
    case MuStructure::PentaSpan: return "pentaSpan";
  }
  throw InvalidParameter("unreachable mu structure");
}

MuStructure mu_structure_from_string(const std::string& name) {
  std::string key;
  for (const char c : name)
    if (c != '_') key.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (key == "full") return MuStructure::Full;
  if (key == "scalar") return MuStructure::Scalar;
  if (key == "diag") return MuStructure::Diag;
  if (key == "pentaspan") return MuStructure::PentaSpan;
  throw MalformedInput("unknown mu structure: " + name);
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::Inside: return "inside";
    case Membership::BoundaryBand: return "boundaryBand";
    case Membership::Outside: return "outside";
  }
  throw InvalidParameter("unreachable membership value");
}

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Objective over one closed-form sheet: maps a sweep variable x in C to the
// perturbation size max-norm, or +inf where the sheet has no solution.
using Sheet = std::function<double(Complex)>;

struct Found {
  double m = kInf;
  Complex x{};
};

// One polar grid pass over the disc |x - center| <= w. Keeps up to `keep`
// well-separated minima (separation w/6).
std::vector<Found> grid_pass(const Sheet& f, Complex center, double w,
                             const MuOptions& opt, int keep,
                             const std::vector<Complex>& probes) {
  std::vector<Found> top;
  auto offer = [&](Complex x) {
    const double m = f(x);
    if (!(m < kInf)) return;
    for (auto& t : top) {
      if (std::abs(x - t.x) < w / 6.0) {
        if (m < t.m) t = {m, x};
        std::sort(top.begin(), top.end(),
                  [](const Found& a, const Found& b) { return a.m < b.m; });
        return;
      }
    }
    top.push_back({m, x});
    std::sort(top.begin(), top.end(),
              [](const Found& a, const Found& b) { return a.m < b.m; });
    if (static_cast<int>(top.size()) > keep) top.resize(keep);
  };

  offer(center);
  for (const Complex p : probes) offer(p);
  for (int j = 0; j < opt.radii; ++j) {
    const double r = w * static_cast<double>(j + 1) / opt.radii;
    for (int k = 0; k < opt.angles; ++k) {
      const double th = 2.0 * M_PI * static_cast<double>(k) / opt.angles;
      offer(center + std::polar(r, th));
    }
  }
  return top;
}

// Nelder-Mead on the two real coordinates of the sweep variable; pins the
// bottom of the basin the grid landed in.
Found simplex_polish(const Sheet& f, Found start, double step) {
  auto eval = [&](Complex x) { return Found{f(x), x}; };
  std::array<Found, 3> s{start, eval(start.x + Complex{step, 0.0}),
                         eval(start.x + Complex{0.0, step})};
  auto order = [&] {
    std::sort(s.begin(), s.end(), [](const Found& a, const Found& b) { return a.m < b.m; });
  };
  order();
  for (int it = 0; it < 200; ++it) {
    const Complex centroid = 0.5 * (s[0].x + s[1].x);
    const Found refl = eval(centroid + (centroid - s[2].x));
    if (refl.m < s[0].m) {
      const Found expa = eval(centroid + 2.0 * (centroid - s[2].x));
      s[2] = expa.m < refl.m ? expa : refl;
    } else if (refl.m < s[1].m) {
      s[2] = refl;
    } else {
      const Found contr = eval(centroid + 0.5 * (s[2].x - centroid));
      if (contr.m < s[2].m) {
        s[2] = contr;
      } else {
        s[1] = eval(s[0].x + 0.5 * (s[1].x - s[0].x));
        s[2] = eval(s[0].x + 0.5 * (s[2].x - s[0].x));
      }
    }
    order();
    if (std::abs(s[2].x - s[0].x) < 1e-13 * std::max(1.0, std::abs(s[0].x))) break;
  }
  return s[0].m < start.m ? s[0] : start;
}

// Multi-level refinement on one sheet; returns the surviving candidates and
// the final radial spacing.
std::pair<std::vector<Found>, double> sheet_minimize(const Sheet& f, double radius,
                                                     const MuOptions& opt,
                                                     const std::vector<Complex>& probes) {
  std::vector<Found> centers = grid_pass(f, Complex{}, radius, opt, 4, probes);
  double w = radius / 8.0;
  for (int level = 1; level < opt.levels && !centers.empty(); ++level) {
    std::vector<Found> next;
    for (const auto& c : centers) {
      const auto local = grid_pass(f, c.x, w, opt, 1, {});
      if (!local.empty()) next.push_back(local.front());
    }
    std::sort(next.begin(), next.end(),
              [](const Found& a, const Found& b) { return a.m < b.m; });
    centers = next;
    w /= 8.0;
  }
  const double spacing = 8.0 * w / opt.radii;
  for (auto& c : centers) c = simplex_polish(f, c, std::max(spacing, 1e-9 * radius));
  std::sort(centers.begin(), centers.end(),
            [](const Found& a, const Found& b) { return a.m < b.m; });
  return {centers, spacing};
}

// Gap below m such that [1/m, 1/(m - gap)] has width exactly `resolution`.
double coverage_gap(double m, double resolution) {
  return resolution * m * m / (1.0 + resolution * m);
}

MuBracket bracket_from_sheets(const std::vector<Sheet>& sheets,
                              const std::vector<Complex>& probes, double radius,
                              const MuOptions& opt, MuStructure st) {
  Found best;
  double spacing = kInf;
  int best_sheet = 0;
  for (std::size_t i = 0; i < sheets.size(); ++i) {
    auto [found, h] = sheet_minimize(sheets[i], radius, opt, probes);
    if (!found.empty() && found.front().m < best.m) {
      best = found.front();
      spacing = h;
      best_sheet = static_cast<int>(i);
    }
  }
  if (!(best.m < kInf))
    throw InternalInconsistency("mu: no singularizing certificate found");

  // Shrink around the winner until the grid spacing supports the coverage
  // gap of the requested resolution.
  double w = spacing * opt.radii;
  for (int round = 0; round < 16 && spacing > coverage_gap(best.m, opt.resolution) / 8.0;
       ++round) {
    w /= 8.0;
    const auto local = grid_pass(sheets[best_sheet], best.x, w, opt, 1, {});
    if (!local.empty() && local.front().m < best.m) best = local.front();
    spacing = w / opt.radii;
  }

  const double lower = 1.0 / best.m;
  return {lower, lower + opt.resolution, st};
}

std::vector<Complex> quadratic_certificates(Complex c2, Complex c1, Complex c0) {
  // roots of c2 x^2 + c1 x + c0, degenerating gracefully to the linear case
  std::vector<Complex> out;
  if (std::abs(c2) < 1e-300) {
    if (std::abs(c1) > 1e-300) out.push_back(-c0 / c1);
    return out;
  }
  const Complex d = std::sqrt(c1 * c1 - 4.0 * c2 * c0);
  const Complex q = (std::abs(c1 - d) >= std::abs(c1 + d)) ? (c1 - d) : (c1 + d);
  const Complex r1 = -0.5 * q / c2;
  out.push_back(r1);
  if (std::abs(r1) > 1e-300) out.push_back(c0 / (c2 * r1));
  return out;
}

MuBracket mu_diag(const Mat2& A, const MuOptions& opt) {
  const Complex a11 = A.a11;
  const Complex a22 = A.a22;
  const Complex d = det(A);

  // a12 a21 == 0 factors det(I - AX) = (1 - a11 x1)(1 - a22 x2): exact value.
  const double off = std::abs(A.a12 * A.a21);
  if (off <= 1e-13 * std::max({1.0, std::abs(a11 * a22), std::abs(d)})) {
    const double v = std::max(std::abs(a11), std::abs(a22));
    return {v, v, MuStructure::Diag};
  }

  // Sweep one diagonal entry, solve the constraint
  // 1 - a11 x1 - a22 x2 + d x1 x2 = 0 for the other in closed form.
  auto sheet = [](Complex at, Complex bt, Complex dt) -> Sheet {
    return [at, bt, dt](Complex x1) -> double {
      const Complex den = bt - dt * x1;
      const Complex num = 1.0 - at * x1;
      if (std::abs(den) < 1e-14)
        return (std::abs(num) < 1e-12) ? std::abs(x1) : kInf;
      return std::max(std::abs(x1), std::abs(num / den));
    };
  };
  const std::vector<Sheet> sheets{sheet(a11, a22, d), sheet(a22, a11, d)};

  std::vector<Complex> probes = quadratic_certificates(d, -(a11 + a22), 1.0);
  if (std::abs(a11) > 1e-300) probes.push_back(1.0 / a11);
  if (std::abs(a22) > 1e-300) probes.push_back(1.0 / a22);

  double radius = kInf;
  for (const auto& f : sheets) {
    radius = std::min(radius, f(Complex{}));
    for (const Complex p : probes) radius = std::min(radius, f(p));
  }
  if (!(radius < kInf))
    throw InternalInconsistency("mu_diag: no initial certificate");
  return bracket_from_sheets(sheets, probes, radius, opt, MuStructure::Diag);
}

MuBracket mu_penta_span(const PentaPoint& q, const MuOptions& opt) {
  // det(I - A(xI + yE12)) = 1 - s x - a y + p x^2 with (a, s, p) the
  // pentablock coordinates of A.
  if (std::abs(q.a) <= 1e-12) {
    // Constraint independent of y; the optimum is X = xI at the smallest
    // root of p x^2 - s x + 1, so mu is the largest root modulus of
    // lambda^2 - s lambda + p, read off its companion matrix.
    const double r = spectral_radius(Mat2{q.s, q.p, -1.0, 0.0});
    return {r, r, MuStructure::PentaSpan};
  }

  const Complex a = q.a;
  const Complex s = q.s;
  const Complex p = q.p;
  const Sheet f = [a, s, p](Complex x) -> double {
    const Complex y = (1.0 - s * x + p * x * x) / a;
    return op_norm(Mat2{x, y, Complex{}, x});
  };
  const std::vector<Complex> probes = quadratic_certificates(p, -s, 1.0);
  double radius = f(Complex{});
  for (const Complex pr : probes) radius = std::min(radius, f(pr));
  return bracket_from_sheets({f}, probes, radius, opt, MuStructure::PentaSpan);
}

}  // namespace

MuBracket mu(const Mat2& A, MuStructure structure, const MuOptions& opt) {
  if (!(opt.resolution > 0.0)) throw InvalidParameter("mu: resolution must be positive");
  switch (structure) {
    case MuStructure::Full: {
      const double v = op_norm(A);
      return {v, v, structure};
    }
    case MuStructure::Scalar: {
      const double v = spectral_radius(A);
      return {v, v, structure};
    }
    case MuStructure::Diag:
      return mu_diag(A, opt);
    case MuStructure::PentaSpan:
      return mu_penta_span(project_penta(A), opt);
  }
  throw InvalidParameter("unreachable mu structure");
}

Mat2 realize_tetra(const TetraPoint& x) {
  const Complex w = x.x1 * x.x2 - x.x3;
  const double mag = std::abs(w);
  const Complex off = mag > 0.0 ? std::polar(std::sqrt(mag), 0.5 * std::arg(w)) : Complex{};
  return {x.x1, off, off, x.x2};
}

Mat2 realize_penta(const PentaPoint& q) {
  if (std::abs(q.a) > 1e-9) {
    const Complex h = 0.5 * q.s;
    return {h, (h * h - q.p) / q.a, q.a, h};
  }
  const auto roots = unsymmetrize(GammaNPoint{{q.s, q.p}});
  return {roots[0], Complex{}, Complex{}, roots[1]};
}

Membership in_tetra(const TetraPoint& x, double tol, const MuOptions& opt) {
  const MuBracket b = mu(realize_tetra(x), MuStructure::Diag, opt);
  if (b.upper < 1.0 - tol) return Membership::Inside;
  if (b.lower > 1.0 + tol) return Membership::Outside;
  return Membership::BoundaryBand;
}

Membership in_penta(const PentaPoint& q, double tol, const MuOptions& opt) {
  const MuBracket b = mu(realize_penta(q), MuStructure::PentaSpan, opt);
  if (b.upper < 1.0 - tol) return Membership::Inside;
  if (b.lower > 1.0 + tol) return Membership::Outside;
  return Membership::BoundaryBand;
}

}  // namespace mudom

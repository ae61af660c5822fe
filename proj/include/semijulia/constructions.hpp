#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "semijulia/generator.hpp"
#include "semijulia/semigroup.hpp"

namespace semijulia {

struct AssumptionCheck {
  std::string description;
  bool pass = false;
  double margin = 0.0;  // positive when the check holds with room to spare
};

struct ConstructionResult {
  std::string name;
  GeneratorSet gens;
  std::vector<std::pair<std::string, double>> derived_constants;
  std::vector<AssumptionCheck> assumption_checks;
  /// Square window that holds J(G) with a small margin.
  Complex view_center{};
  double view_half = 1.0;

  double constant(const std::string& key) const {
    for (const auto& [k, v] : derived_constants)
      if (k == key) return v;
    throw Error(ErrorKind::InvalidArgument, "no derived constant '" + key + "'");
  }

  GridSpec view_grid(int size) const { return GridSpec::square(view_center, view_half, size); }
};

namespace detail {

inline constexpr int kCircleSamples = 4096;

inline AssumptionCheck make_check(std::string what, double margin) {
  return {std::move(what), margin > 0.0, margin};
}

/// Throws on the first failing check, quoting it and its margin.
inline void require_checks(const ConstructionResult& res, const std::string& advice) {
  for (const auto& c : res.assumption_checks)
    if (!c.pass)
      throw Error(ErrorKind::Domain,
                  res.name + ": assumption failed: " + c.description + " (margin " +
                      std::to_string(c.margin) + ")" + (advice.empty() ? "" : "; " + advice),
                  c.margin);
}

inline Complex circle_point(Complex c, double r, int k, int n = kCircleSamples) {
  return c + std::polar(r, 2.0 * std::numbers::pi * k / n);
}

/// f^m for a monomial f = a z^d, in closed form.
inline Polynomial monomial_iterate(Complex a, int d, int m) {
  Polynomial p = Polynomial::monomial(a, d);
  Polynomial out = p;
  for (int i = 1; i < m; ++i) out = p.compose(out);
  return out;
}

/// (z - c)^2 / s + c, whose Julia set is the circle C(c, s) for real s > 0.
inline Polynomial centred_quadratic(Complex c, double s) {
  return Polynomial{c * c / s + c, -2.0 * c / s, Complex{1.0 / s}};
}

}  // namespace detail

// ---- nested round circles ---------------------------------------------------

/// g1 = (a z^k)^{m1}, g2 = (b z^j)^{m2}. Both Julia sets are round circles
/// about 0 and the closed annulus A between them must pull back into two
/// disjoint sub-annuli.
inline ConstructionResult cantor_circles(Complex a, Complex b, int k, int j, int m1, int m2) {
  if (k < 2 || j < 2) throw Error(ErrorKind::InvalidArgument, "degrees k and j must be >= 2");
  if (m1 < 1 || m2 < 1) throw Error(ErrorKind::InvalidArgument, "iterates m1, m2 must be >= 1");
  if (a == Complex{} || b == Complex{})
    throw Error(ErrorKind::InvalidArgument, "coefficients must be nonzero");
  const double ca = std::pow(std::abs(a), k - 1), cb = std::pow(std::abs(b), j - 1);
  if (std::abs(ca - cb) <= 1e-12 * std::max(ca, cb))
    throw Error(ErrorKind::InvalidArgument,
                "|a|^(k-1) equals |b|^(j-1): the two Julia circles coincide");

  ConstructionResult res;
  res.name = "cantor";
  const Polynomial g1 = detail::monomial_iterate(a, k, m1);
  const Polynomial g2 = detail::monomial_iterate(b, j, m2);
  res.gens = GeneratorSet({{"g1", g1, 1}, {"g2", g2, 1}});
  const double r1 = leading_capacity(g1), r2 = leading_capacity(g2);
  const double lo = std::min(r1, r2), hi = std::max(r1, r2);
  // |c z^D| in [lo, hi]  <=>  |z| in [(lo/|c|)^(1/D), (hi/|c|)^(1/D)].
  auto pull = [&](const Polynomial& g) {
    const double c = std::abs(g.leading());
    const int d = g.degree();
    return std::make_pair(std::pow(lo / c, 1.0 / d), std::pow(hi / c, 1.0 / d));
  };
  const auto [p1lo, p1hi] = pull(g1);
  const auto [p2lo, p2hi] = pull(g2);
  res.derived_constants = {{"radius_g1", r1},     {"radius_g2", r2},     {"pullback_g1_inner", p1lo},
                           {"pullback_g1_outer", p1hi}, {"pullback_g2_inner", p2lo},
                           {"pullback_g2_outer", p2hi}, {"R", res.gens.escape_radius()}};
  const double tol = 1e-12 * hi;
  res.assumption_checks = {
      detail::make_check("g1^-1(A) inside A", std::min(p1lo - lo, hi - p1hi) + tol),
      detail::make_check("g2^-1(A) inside A", std::min(p2lo - lo, hi - p2hi) + tol),
      detail::make_check("g1^-1(A) and g2^-1(A) disjoint",
                         std::max(p2lo - p1hi, p1lo - p2hi)),
  };
  res.view_center = 0.0;
  res.view_half = 1.025 * hi;
  detail::require_checks(res, "increase m1 and m2");
  return res;
}

// ---- figure1 pair -----------------------------------------------------------

/// h1 = (z^2 - 1)^2 - 1 and h2 = (z^2/4)^2/4.
inline ConstructionResult figure1_semigroup(int depth = 12) {
  ConstructionResult res;
  res.name = "figure1";
  const Polynomial g1{-1.0, 0.0, 1.0};
  const Polynomial h1 = g1.compose(g1);
  const Polynomial h2 = detail::monomial_iterate(0.25, 2, 2);
  res.gens = GeneratorSet({{"h1", h1, 1}, {"h2", h2, 1}});
  const auto pc = postcritical_bounded_check(res.gens, depth);
  double reach = 0.0;
  for (auto z : pc.sample.points) reach = std::max(reach, std::abs(z));
  res.derived_constants = {{"R", res.gens.escape_radius()},
                           {"postcritical_depth", static_cast<double>(depth)},
                           {"postcritical_max_modulus", reach}};
  res.assumption_checks = {detail::make_check(
      "postcritical orbits bounded to depth " + std::to_string(depth),
      pc.bounded() ? res.gens.escape_radius() - reach : -1.0)};
  res.view_center = 0.0;
  res.view_half = 5.5;
  detail::require_checks(res, "");
  return res;
}

// ---- the J_min example ------------------------------------------------------

/// Shared geometry of the -z^2 / z^2/sqrt(2) / circle-map family.
struct HminGeometry {
  int m2 = 0, m3 = 0;
  double P = 0, P2 = 0, P4 = 0, r = 0, eps = 0;
  Polynomial h1, h2, f3;
  /// Radial function (about 0) of the outer boundary of
  /// h1^-1(J(f3)) u h2^-1(J(f3)); both sets are star-shaped about 0.
  double gamma2_radius(double theta) const {
    const int d = h2.degree();
    const double c = std::abs(h2.leading());
    auto circle_radius = [&](double phi) {  // ray from 0 at angle phi meets C(eps, r)
      const double s = std::sin(phi);
      return eps * std::cos(phi) + std::sqrt(r * r - eps * eps * s * s);
    };
    const double rho1 = std::sqrt(circle_radius(2.0 * theta + std::numbers::pi));
    const double rho2 = std::pow(circle_radius(d * theta) / c, 1.0 / d);
    return std::max(rho1, rho2);
  }
  /// Largest distance from eps to the outer boundary curve.
  double gamma2_max_offset(int samples = 1 << 16) const {
    double best = 0.0;
    for (int i = 0; i < samples; ++i) {
      const double t = 2.0 * std::numbers::pi * i / samples;
      best = std::max(best, std::abs(std::polar(gamma2_radius(t), t) - Complex{eps}));
    }
    return best;
  }
};

inline HminGeometry hmin_geometry(int m2) {
  if (m2 < 2) throw Error(ErrorKind::InvalidArgument, "m2 must be >= 2");
  if (m2 > 12) throw Error(ErrorKind::InvalidArgument, "m2 above 12 is not supported");
  HminGeometry g;
  g.m2 = m2;
  const double d = std::ldexp(1.0, m2);
  g.P = std::pow(2.0, (d - 1.0) / (2.0 * d));
  g.P2 = g.P * g.P;
  g.P4 = g.P2 * g.P2;
  g.r = 0.5 * (g.P4 + g.P2);
  g.eps = 0.5 * (g.P4 - g.P2);
  g.h1 = Polynomial::monomial(-1.0, 2);
  g.h2 = detail::monomial_iterate(1.0 / std::numbers::sqrt2, 2, m2);
  g.f3 = detail::centred_quadratic(g.eps, g.r);
  return g;
}

namespace detail {

/// Annulus about eps, used for A' and A''.
struct CentredAnnulus {
  double inner = 0, outer = 0;
};

/// Radius of h3^-n of a circle about eps of radius t (u -> u^2/r per step).
inline double pull_radius(double t, double r, double steps) {
  return r * std::pow(t / r, std::pow(0.5, steps));
}
/// Radius of h3^n of such a circle.
inline double push_radius(double t, double r, double steps) {
  return r * std::pow(t / r, std::pow(2.0, steps));
}

inline void add_hmin_checks(ConstructionResult& res, const HminGeometry& g,
                            const CentredAnnulus& a_prime) {
  const double P = g.P, r = g.r, eps = g.eps;
  auto on_circle = [&](Complex z) { return std::abs(std::abs(z - eps) - r); };
  const double idtol = 1e-10 * r;
  // h1^-1(J(f3)) misses J(f3): |h1(w) - eps| stays away from r on J(f3).
  double disjoint = INFINITY;
  for (int k = 0; k < kCircleSamples; ++k) {
    const Complex w = circle_point(eps, r, k);
    disjoint = std::min(disjoint, std::abs(std::abs(g.h1(w) - eps) - r));
  }
  const int d = g.h2.degree();
  const double rho_h2 = std::pow(g.P4 / std::abs(g.h2.leading()), 1.0 / d);
  res.assumption_checks = {
      make_check("h2(P) lies on J(h1)", 1e-12 - std::abs(std::abs(g.h2(P)) - 1.0)),
      make_check("-P^2 lies on C(eps, r)", idtol - on_circle(-g.P2)),
      make_check("P^4 lies on C(eps, r)", idtol - on_circle(g.P4)),
      make_check("h1^2(e^{i pi/4} P) equals P^4",
                 idtol - std::abs(g.h1(g.h1(std::polar(P, std::numbers::pi / 4))) - g.P4)),
      make_check("h1^-1(J(f3)) and J(f3) disjoint (4096 samples)", disjoint),
      make_check("h2^-1(J(f3)) strictly inside J(f3)", r - eps - rho_h2),
      make_check("A' lies beyond the h1, h2 pullbacks of J(f3)",
                 a_prime.inner - g.gamma2_max_offset()),
      make_check("A' inside B(eps, r)", r - a_prime.outer),
      make_check("h3(A') inside B(0,1)",
                 1.0 - (eps + push_radius(a_prime.outer, r, g.m3))),
  };
}

}  // namespace detail

inline ConstructionResult hmin_not(int m2, int m3) {
  if (m3 < 1) throw Error(ErrorKind::InvalidArgument, "m3 must be >= 1");
  HminGeometry g = hmin_geometry(m2);
  g.m3 = m3;
  ConstructionResult res;
  res.name = "hmin-not";
  res.gens = GeneratorSet({{"h1", g.h1, 1}, {"h2", g.h2, 1}, {"h3", g.f3, m3}});
  const double s = g.gamma2_max_offset();
  const detail::CentredAnnulus a_prime{s + 0.25 * (g.r - s), s + 0.5 * (g.r - s)};
  detail::add_hmin_checks(res, g, a_prime);
  res.derived_constants = {{"m2", double(m2)},
                           {"m3", double(m3)},
                           {"P", g.P},
                           {"P2", g.P2},
                           {"P4", g.P4},
                           {"r", g.r},
                           {"eps", g.eps},
                           {"pullback_max_offset", s},
                           {"A_prime_inner", a_prime.inner},
                           {"A_prime_outer", a_prime.outer},
                           {"R", res.gens.escape_radius()}};
  res.view_center = g.eps;
  res.view_half = 1.03 * g.r;
  detail::require_checks(res, "increase m2 or m3");
  return res;
}

/// Smallest m3 in 1..cap for which the construction's checks pass.
inline int minimal_m3(int m2, int cap = 64) {
  for (int m3 = 1; m3 <= cap; ++m3) {
    try {
      hmin_not(m2, m3);
      return m3;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Domain) throw;
    }
  }
  throw Error(ErrorKind::NonConvergence, "no m3 up to " + std::to_string(cap) + " works");
}

// ---- k components with four generators ------------------------------------

namespace detail {

/// Largest distance from eps along each direction, over a dense sample of
/// gamma2 (an outer hull of the curve as seen from eps).
class RadialHull {
 public:
  RadialHull(const HminGeometry& g, int bins = 8192, int samples = 1 << 17) : max_(bins, 0.0) {
    for (int i = 0; i < samples; ++i) {
      const double t = 2.0 * std::numbers::pi * i / samples;
      const Complex u = std::polar(g.gamma2_radius(t), t) - Complex{g.eps};
      auto& m = max_[bin(std::arg(u))];
      m = std::max(m, std::abs(u));
    }
    lo_ = *std::min_element(max_.begin(), max_.end());
    hi_ = *std::max_element(max_.begin(), max_.end());
  }
  double operator()(double phi) const { return max_[bin(phi)]; }
  double min() const { return lo_; }
  double max() const { return hi_; }

 private:
  std::size_t bin(double phi) const {
    const double two_pi = 2.0 * std::numbers::pi;
    double t = std::fmod(phi, two_pi);
    if (t < 0) t += two_pi;
    return std::min(max_.size() - 1, static_cast<std::size_t>(t / two_pi * max_.size()));
  }
  std::vector<double> max_;
  double lo_ = 0, hi_ = 0;
};

/// Samples of the outer edge of h3^-n(B) in directions psi near pi, where the
/// tangent circle at P^4 is decided. `steps` = n * m3.
struct TangencyBand {
  std::vector<Complex> points;
  double r0 = 0;
};

inline TangencyBand tangency_band(const HminGeometry& g, const RadialHull& hull, double steps) {
  const double r = g.r, pi = std::numbers::pi;
  const double scale = std::ldexp(1.0, static_cast<int>(steps));
  auto radius = [&](double psi) { return pull_radius(hull(psi * scale), r, steps); };
  // Smallest circle through P^4 tangent to C(eps, r) holding eps + rho e^{i psi}.
  auto need = [&](double rho, double psi) {
    const Complex z = std::polar(rho, psi) - Complex{r};
    return std::norm(z) / (2.0 * (r - rho * std::cos(psi)));
  };
  const double rho_hi = pull_radius(hull.max(), r, steps);
  const double floor_r0 = need(radius(pi), pi);
  double delta = pi;  // beyond the band even the largest radius needs less
  for (double d = 1e-6; d < pi; d *= 1.25)
    if (need(rho_hi, pi - d) < floor_r0) {
      delta = d;
      break;
    }
  const double period = 2.0 * pi / scale;
  const auto n = static_cast<std::int64_t>(
      std::min(4.0e6, std::ceil(2.0 * delta / period * 256.0) + 1.0));
  // Keep at most ~2^16 points, always including the one that fixes r0.
  const std::int64_t stride = std::max<std::int64_t>(1, n >> 16);
  TangencyBand band;
  Complex arg_max{};
  for (std::int64_t i = 0; i <= n; ++i) {
    const double psi = pi - delta + 2.0 * delta * static_cast<double>(i) / static_cast<double>(n);
    const double rho = radius(psi);
    const Complex z = Complex{g.eps} + std::polar(rho, psi);
    if (const double v = need(rho, psi); v > band.r0) {
      band.r0 = v;
      arg_max = z;
    }
    if (i % stride == 0) band.points.push_back(z);
  }
  band.points.push_back(arg_max);
  return band;
}

inline double max_modulus_on_circle(const Generator& h, Complex c, double rad) {
  double m = 0.0;
  for (int k = 0; k < kCircleSamples; ++k) m = std::max(m, std::abs(h(circle_point(c, rad, k))));
  return m;
}

}  // namespace detail

/// The part of the four-generator construction that does not depend on m4.
struct KComponentsPlan {
  int k = 0, ell = 0;
  HminGeometry g;
  double a0 = 0, b0 = 0;  // B sits in a0 <= |z - eps| <= b0
  detail::CentredAnnulus a_prime, a_second;
  double r0 = 0, eps0 = 0;
  std::vector<Complex> band;         // outer edge of h3^-(l+1)(B) near the tangency
  Complex far_point{};               // a point of h3^-(l+1)(gamma2) far from the tangency

  double a_n(int n) const { return detail::pull_radius(a0, g.r, double(n) * g.m3); }
  double b_n(int n) const { return detail::pull_radius(b0, g.r, double(n) * g.m3); }
};

inline KComponentsPlan k_components_plan(int k, int m2, int m3) {
  if (k < 2)
    throw Error(ErrorKind::InvalidArgument,
                "construction needs k >= 2 (k = 1 is any connected example)");
  if (m3 < 1) throw Error(ErrorKind::InvalidArgument, "m3 must be >= 1");
  KComponentsPlan p;
  p.k = k;
  p.ell = k - 2;
  p.g = hmin_geometry(m2);
  p.g.m3 = m3;
  const double steps_out = static_cast<double>(p.ell + 1) * m3;
  if (steps_out > 60) throw Error(ErrorKind::InvalidArgument, "(k - 1) * m3 above 60");
  const detail::RadialHull hull(p.g);
  p.a0 = 1.0 - p.g.eps;
  p.b0 = hull.max();
  const double gap1 = p.a_n(1) - p.b0;
  p.a_prime = {p.b0 + 0.2 * gap1, p.b0 + 0.4 * gap1};
  const double gap = p.a_n(p.ell + 1) - p.b_n(p.ell);
  p.a_second = {p.b_n(p.ell) + 0.6 * gap, p.b_n(p.ell) + 0.8 * gap};
  auto band = detail::tangency_band(p.g, hull, steps_out);
  p.r0 = band.r0;
  p.eps0 = p.g.P4 - p.r0;
  p.band = std::move(band.points);
  p.far_point = Complex{p.g.eps} + detail::pull_radius(hull(0.0), p.g.r, steps_out);
  return p;
}

/// Adds h4, a high iterate of the circle map of the circle tangent to J(h3) at
/// P^4, to the J_min example so that J has exactly k components.
inline ConstructionResult k_components(const KComponentsPlan& plan, int m4) {
  if (m4 < 1) throw Error(ErrorKind::InvalidArgument, "m4 must be >= 1");
  const HminGeometry& g = plan.g;
  const int ell = plan.ell, m3 = g.m3;
  const double r = g.r, eps = g.eps, r0 = plan.r0, eps0 = plan.eps0;
  const double steps_out = static_cast<double>(ell + 1) * m3;
  const double a0 = plan.a0, b0 = plan.b0;
  const auto& a_prime = plan.a_prime;
  const auto& a_second = plan.a_second;
  auto a_n = [&](int n) { return plan.a_n(n); };
  auto b_n = [&](int n) { return plan.b_n(n); };
  const Polynomial f4 = detail::centred_quadratic(eps0, r0);

  ConstructionResult res;
  res.name = "k-components";
  res.gens = GeneratorSet({{"h1", g.h1, 1}, {"h2", g.h2, 1}, {"h3", g.f3, m3}, {"h4", f4, m4}});
  const Generator& h1 = res.gens[0];
  const Generator& h2 = res.gens[1];
  const Generator& h4 = res.gens[3];
  const int k = plan.k, m2 = g.m2;

  // A0 = A' u h3^j(A''), j = 0..ell, all annuli about eps.
  std::vector<detail::CentredAnnulus> a0_parts{a_prime};
  for (int j = 0; j <= ell; ++j)
    a0_parts.push_back({detail::push_radius(a_second.inner, r, double(j) * m3),
                        detail::push_radius(a_second.outer, r, double(j) * m3)});

  double h4_on_a0 = 0.0, escape_gap = INFINITY;
  for (const auto& part : a0_parts) {
    h4_on_a0 = std::max({h4_on_a0, detail::max_modulus_on_circle(h4, eps, part.inner),
                         detail::max_modulus_on_circle(h4, eps, part.outer)});
    for (int s = 0; s <= 8; ++s) {
      const double rad = part.inner + (part.outer - part.inner) * s / 8.0;
      for (int q = 0; q < detail::kCircleSamples; ++q) {
        const Complex z = detail::circle_point(eps, rad, q);
        escape_gap = std::min({escape_gap, std::abs(h1(z) - eps) - r, std::abs(h2(z) - eps) - r});
      }
    }
  }
  // (ii): the connected curve h3^-(l+1)(gamma2) has points on both sides of
  // h4^-1(gamma1), i.e. with |h4| above and below 1.
  double band_max = 0.0;
  for (auto z : plan.band) band_max = std::max(band_max, std::abs(h4(z)));
  const double far_value = std::abs(h4(plan.far_point));
  // (iii): outside B(eps, r + d) is forward invariant under h1, h2, h3 and h4
  // sends it beyond B(0, R) once r0 (1 + d/r0)^(2^m4) > R + |eps0|.
  const double R = res.gens.escape_radius();
  const double d = escape_gap;
  const int deg2 = g.h2.degree();
  const double h2_keeps =
      std::abs(g.h2.leading()) * std::pow(g.P2 + std::max(d, 0.0), deg2) - eps - r - d;
  const double log_reach = d > 0 ? std::log(r0) + std::ldexp(1.0, m4) * std::log1p(d / r0)
                                 : -INFINITY;

  res.assumption_checks = {
      detail::make_check("h3^-1(B) beyond B", a_n(1) - b0),
      detail::make_check("h3(A') inside B(0,1)",
                         1.0 - (eps + detail::push_radius(a_prime.outer, r, m3))),
      detail::make_check("h3^(l+1)(A'') inside B(0,1)",
                         1.0 - (eps + detail::push_radius(a_second.outer, r, steps_out))),
      detail::make_check("eps0 inside B(0,1)", 1.0 - std::abs(eps0)),
      detail::make_check("(i) h4(A0) inside B(0,1)", 1.0 - h4_on_a0),
      detail::make_check("(ii) h4^-1(gamma1) meets h3^-(l+1)(gamma2)",
                         std::min(band_max - 1.0, 1.0 - far_value)),
      detail::make_check("(iii) h1(A0), h2(A0) outside K(h3)", escape_gap),
      detail::make_check("(iii) h2 keeps the outside of B(eps, r + d)", h2_keeps),
      detail::make_check("(iii) h4 sends it beyond B(0, R) (log margin)",
                         log_reach - std::log(R + std::abs(eps0))),
      detail::make_check("(iv) h4^-1(gamma1) surrounds h3^-l(B)",
                         1.0 - detail::max_modulus_on_circle(h4, eps, b_n(ell))),
  };
  res.derived_constants = {{"k", double(k)},
                           {"l", double(ell)},
                           {"m2", double(m2)},
                           {"m3", double(m3)},
                           {"m4", double(m4)},
                           {"P", g.P},
                           {"r", r},
                           {"eps", eps},
                           {"B_inner_offset", a0},
                           {"B_outer_offset", b0},
                           {"A_prime_inner", a_prime.inner},
                           {"A_prime_outer", a_prime.outer},
                           {"A_second_inner", a_second.inner},
                           {"A_second_outer", a_second.outer},
                           {"r0", r0},
                           {"eps0", eps0},
                           {"R", R}};
  res.view_center = eps;
  res.view_half = 1.03 * r;
  detail::require_checks(res, "increase m3 (first four checks) or m4");
  return res;
}

inline ConstructionResult k_components(int k, int m2, int m3, int m4) {
  return k_components(k_components_plan(k, m2, m3), m4);
}

/// Smallest (m3, m4), m3 scanned first, for which k_components succeeds.
inline ConstructionResult k_components_auto(int k, int m2 = 5, int cap = 40) {
  const int ell = k - 2;
  for (int m3 = minimal_m3(m2); m3 <= cap && double(ell + 1) * m3 <= 60; ++m3) {
    const auto plan = k_components_plan(k, m2, m3);
    for (int m4 = 1; m4 <= cap; ++m4) {
      try {
        return k_components(plan, m4);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::Domain) throw;
        const std::string msg = e.what();
        if (msg.find("(i") == std::string::npos) break;  // needs a larger m3
      }
    }
  }
  throw Error(ErrorKind::NonConvergence, "no (m3, m4) up to " + std::to_string(cap) + " works");
}

// ---- non-hyperbolic pair ----------------------------------------------------

/// f1 = z^2 + c and f2 = (z - z0)^2/(c - z0) + z0 with z0 the attracting fixed
/// point of f1; the critical value c of f1 sits on J(f2) = C(z0, |c - z0|).
inline ConstructionResult nothyp_pair(double c, int m1, int m2) {
  if (!(c > 0.0 && c < 0.25)) throw Error(ErrorKind::InvalidArgument, "c must lie in (0, 1/4)");
  if (m1 < 1 || m2 < 1) throw Error(ErrorKind::InvalidArgument, "m1, m2 must be >= 1");
  const double z0 = 0.5 * (1.0 - std::sqrt(1.0 - 4.0 * c));
  const double rho = std::abs(c - z0);
  const Polynomial f1{c, 0.0, 1.0};
  const Complex s = c - z0;
  const Polynomial f2{z0 * z0 / s + z0, -2.0 * z0 / s, 1.0 / s};
  ConstructionResult res;
  res.name = "nothyp";
  res.gens = GeneratorSet({{"h1", f1, m1}, {"h2", f2, m2}});
  double worst1 = 0.0, worst2 = 0.0;
  for (int k = 0; k < detail::kCircleSamples; ++k) {
    const Complex z = detail::circle_point(z0, rho, k);
    worst1 = std::max(worst1, std::abs(res.gens[0](z) - z0));
    worst2 = std::max(worst2, std::abs(res.gens[1](z) - z0));
  }
  const double tol = 1e-9 * rho;
  res.assumption_checks = {
      detail::make_check("h1 maps B(z0, |c - z0|) into itself", rho + tol - worst1),
      detail::make_check("h2 maps B(z0, |c - z0|) into itself", rho + tol - worst2),
  };
  res.derived_constants = {{"c", c},
                           {"m1", double(m1)},
                           {"m2", double(m2)},
                           {"z0", z0},
                           {"rho", rho},
                           {"critical_value_offset_from_J_h2", std::abs(std::abs(c - z0) - rho)},
                           {"R", res.gens.escape_radius()}};
  res.view_center = 0.0;
  res.view_half = 1.4;
  detail::require_checks(res, "increase m1 or m2");
  return res;
}

}  // namespace semijulia

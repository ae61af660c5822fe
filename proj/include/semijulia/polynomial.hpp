#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "semijulia/error.hpp"

namespace semijulia {

using Complex = std::complex<double>;

/// Dense polynomial a_0 + a_1 z + ... + a_d z^d over double-precision
/// complex numbers. Trailing zero coefficients are trimmed on construction so
/// the stored leading coefficient is always nonzero (except for the zero
/// polynomial, which has no coefficients and degree -1).
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Complex> coeffs) : c_(std::move(coeffs)) {
    while (!c_.empty() && std::abs(c_.back()) == 0.0) c_.pop_back();
  }

  Polynomial(std::initializer_list<Complex> coeffs)
      : Polynomial(std::vector<Complex>(coeffs)) {}

  static Polynomial monomial(Complex a, int d) {
    std::vector<Complex> c(static_cast<std::size_t>(d) + 1, 0.0);
    c.back() = a;
    return Polynomial(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  std::span<const Complex> coeffs() const { return c_; }
  Complex leading() const { return c_.empty() ? Complex{} : c_.back(); }
  Complex coeff(int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : Complex{};
  }

  /// True for a z^d + b (only the constant and leading terms nonzero).
  bool is_binomial() const {
    for (int i = 1; i < degree(); ++i)
      if (c_[i] != Complex{}) return false;
    return degree() >= 1;
  }

  /// True for a*z^d (all lower coefficients exactly zero).
  bool is_monomial() const {
    if (c_.empty()) return false;
    return std::all_of(c_.begin(), c_.end() - 1,
                       [](Complex a) { return a == Complex{}; });
  }

  double max_coeff_modulus() const {
    double m = 0.0;
    for (auto a : c_) m = std::max(m, std::abs(a));
    return m;
  }

  Complex operator()(Complex z) const {
    Complex acc{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  /// Horner evaluation returning (p(z), p'(z)).
  std::pair<Complex, Complex> eval_with_derivative(Complex z) const {
    Complex p{}, dp{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      dp = dp * z + p;
      p = p * z + *it;
    }
    return {p, dp};
  }

  /// (p(z), p'(z), p''(z)).
  std::array<Complex, 3> eval_with_derivatives2(Complex z) const {
    Complex p{}, dp{}, ddp{};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      ddp = ddp * z + 2.0 * dp;
      dp = dp * z + p;
      p = p * z + *it;
    }
    return {p, dp, ddp};
  }

  Polynomial derivative() const {
    if (c_.size() <= 1) return Polynomial{};
    std::vector<Complex> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      d[i - 1] = c_[i] * static_cast<double>(i);
    return Polynomial(std::move(d));
  }

  Polynomial operator+(const Polynomial& o) const {
    std::vector<Complex> r(std::max(c_.size(), o.c_.size()), 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return Polynomial(std::move(r));
  }

  Polynomial operator*(const Polynomial& o) const {
    if (c_.empty() || o.c_.empty()) return Polynomial{};
    std::vector<Complex> r(c_.size() + o.c_.size() - 1, 0.0);
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return Polynomial(std::move(r));
  }

  Polynomial operator*(Complex s) const {
    std::vector<Complex> r = c_;
    for (auto& a : r) a *= s;
    return Polynomial(std::move(r));
  }

  /// p - w (shifts the constant term).
  Polynomial minus_constant(Complex w) const {
    std::vector<Complex> r = c_;
    if (r.empty()) r.push_back(0.0);
    r[0] -= w;
    return Polynomial(std::move(r));
  }

  /// (*this) o inner, i.e. z -> this(inner(z)). Monomials compose in closed
  /// form: a (b z^e)^d = a b^d z^(d e).
  Polynomial compose(const Polynomial& inner) const {
    if (is_monomial() && inner.is_monomial()) {
      const int d = degree();
      return monomial(leading() * std::pow(inner.leading(), d), d * inner.degree());
    }
    Polynomial acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      acc = acc * inner + Polynomial({*it});
    return acc;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Complex> c_;
};

namespace detail {

/// Residual scale used by the preimage contract.
inline double preimage_scale(const Polynomial& p, Complex w) {
  return std::max({1.0, std::abs(w), p.max_coeff_modulus()});
}

/// Largest k such that every nonzero coefficient sits at an index divisible by k.
inline int power_stride(const Polynomial& p) {
  int k = 0;
  for (int i = 1; i <= p.degree(); ++i)
    if (p.coeff(i) != Complex{}) k = std::gcd(k, i);
  return std::max(k, 1);
}

inline Complex newton_polish(const Polynomial& p, Complex z, int steps = 3) {
  for (int i = 0; i < steps; ++i) {
    auto [v, dv] = p.eval_with_derivative(z);
    if (dv == Complex{}) break;
    Complex next = z - v / dv;
    if (!std::isfinite(next.real()) || !std::isfinite(next.imag())) break;
    if (std::abs(p(next)) > std::abs(v)) break;
    z = next;
  }
  return z;
}

/// Durand-Kerner simultaneous iteration. Starting points sit on a circle of
/// radius 1 + max|a_i/a_d|, rotated by an irrational angle.
inline std::vector<Complex> durand_kerner(const Polynomial& p, int max_iter,
                                          double& max_step) {
  const int d = p.degree();
  const Complex lead = p.leading();
  double bound = 0.0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(p.coeff(i) / lead));
  const double radius = 1.0 + bound;
  constexpr double kTwist = 0.4142135623730951;  // sqrt(2) - 1
  std::vector<Complex> z(d);
  for (int k = 0; k < d; ++k)
    z[k] = std::polar(radius, 2.0 * std::numbers::pi * k / d + kTwist);

  max_step = 0.0;
  for (int iter = 0; iter < max_iter; ++iter) {
    max_step = 0.0;
    for (int k = 0; k < d; ++k) {
      Complex denom = lead;
      for (int j = 0; j < d; ++j)
        if (j != k) denom *= (z[k] - z[j]);
      if (denom == Complex{}) denom = Complex(1e-300, 0.0);
      const Complex step = p(z[k]) / denom;
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (max_step < 1e-15) break;
  }
  return z;
}

/// Averages clusters of approximate multiple roots: Durand-Kerner spreads an
/// m-fold root over a ring of size ~eps^(1/m) whose centroid is accurate.
inline std::vector<Complex> merge_root_clusters(const Polynomial& p,
                                                std::vector<Complex> z,
                                                double coarse_tol) {
  const std::size_t n = z.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(z[i] - z[j]) <= coarse_tol * std::max(1.0, std::abs(z[i])))
        parent[find(i)] = find(j);
  std::vector<Complex> out = z;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    Complex sum{};
    int count = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (find(j) == r) {
        sum += z[j];
        ++count;
      }
    if (count > 1) {
      const Complex centroid = sum / static_cast<double>(count);
      if (std::abs(p(centroid)) <= std::abs(p(z[i]))) out[i] = centroid;
    }
  }
  return out;
}

}  // namespace detail

/// All d roots of p (with multiplicity), Newton-polished. Throws
/// NonConvergence when the final residual exceeds `rel_tol * scale`; a
/// negative scale skips the check.
inline std::vector<Complex> polynomial_roots(const Polynomial& p, double rel_tol,
                                             double scale, int max_iter = 200) {
  const int d = p.degree();
  if (d < 1) throw Error(ErrorKind::InvalidArgument, "root finding needs degree >= 1");
  std::vector<Complex> roots;
  if (d == 1) {
    roots.push_back(-p.coeff(0) / p.coeff(1));
  } else if (p.is_binomial()) {
    // a z^d + b = 0: closed-form d-th roots.
    const Complex rhs = -p.coeff(0) / p.leading();
    const double mod = std::pow(std::abs(rhs), 1.0 / d);
    const double arg = std::arg(rhs);
    for (int k = 0; k < d; ++k)
      roots.push_back(std::polar(mod, (arg + 2.0 * std::numbers::pi * k) / d));
  } else if (d == 2) {
    const Complex a = p.coeff(2), b = p.coeff(1), c = p.coeff(0);
    const Complex disc = std::sqrt(b * b - 4.0 * a * c);
    // Choose the sign avoiding cancellation, recover the other via Vieta.
    const Complex q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc)
                                                              : -0.5 * (b - disc);
    if (q == Complex{}) {
      roots = {Complex{}, Complex{}};
    } else {
      roots = {q / a, c / q};
    }
  } else if (const int k = detail::power_stride(p); k > 1) {
    // p(z) = q(z^k): solve q, then take k-th roots.
    std::vector<Complex> qc;
    for (int i = 0; i <= d; i += k) qc.push_back(p.coeff(i));
    for (auto u : polynomial_roots(Polynomial(qc), rel_tol, -1.0, max_iter)) {
      const double mod = std::pow(std::abs(u), 1.0 / k);
      const double arg = std::arg(u);
      for (int j = 0; j < k; ++j)
        roots.push_back(std::polar(mod, (arg + 2.0 * std::numbers::pi * j) / k));
    }
  } else {
    double step = 0.0;
    roots = detail::durand_kerner(p, max_iter, step);
    roots = detail::merge_root_clusters(p, std::move(roots), 1e-4);
  }
  double worst = 0.0;
  for (auto& r : roots) {
    r = detail::newton_polish(p, r);
    worst = std::max(worst, std::abs(p(r)));
  }
  if (scale >= 0.0 && !(worst <= rel_tol * scale))
    throw Error(ErrorKind::NonConvergence,
                "root solver did not converge (best residual " + std::to_string(worst) + ")",
                worst);
  return roots;
}

/// Roots of p(z) = w, counted with multiplicity.
inline std::vector<Complex> preimages(const Polynomial& p, Complex w) {
  if (p.degree() < 1) throw Error(ErrorKind::InvalidArgument, "preimages need degree >= 1");
  const Polynomial shifted = p.minus_constant(w);
  return polynomial_roots(shifted, 1e-9, detail::preimage_scale(p, w));
}

/// Collapses points closer than `rel_tol` relative to their magnitude.
inline std::vector<Complex> collapse_points(std::vector<Complex> pts, double rel_tol = 1e-7) {
  std::vector<Complex> out;
  for (auto z : pts) {
    bool dup = false;
    for (auto y : out)
      if (std::abs(z - y) <= rel_tol * std::max(1.0, std::abs(y))) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(z);
  }
  return out;
}

/// Roots of p', multiplicities collapsed.
inline std::vector<Complex> critical_points(const Polynomial& p) {
  if (p.degree() < 2)
    throw Error(ErrorKind::InvalidArgument, "critical points need degree >= 2");
  const Polynomial dp = p.derivative();
  if (p.is_monomial()) return {Complex{}};
  std::vector<Complex> roots = polynomial_roots(dp, 0.0, -1.0);
  const int d = p.degree();
  for (auto r : roots) {
    const double bound =
        1e-10 * std::max(1.0, std::abs(dp.leading()) * std::pow(std::abs(r), d - 2));
    if (std::abs(dp(r)) > bound)
      throw Error(ErrorKind::NonConvergence, "critical point residual too large",
                  std::abs(dp(r)));
  }
  return collapse_points(std::move(roots));
}

/// |a_d|^(-1/(d-1)): logarithmic capacity of J(p). For a z^d it is the radius
/// of the circle J(p).
inline double leading_capacity(const Polynomial& p) {
  const int d = p.degree();
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "capacity needs degree >= 2");
  return std::pow(std::abs(p.leading()), -1.0 / (d - 1));
}

}  // namespace semijulia

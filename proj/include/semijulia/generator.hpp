#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "semijulia/polynomial.hpp"

namespace semijulia {

/// Doubling radius of a single polynomial: the positive root R of
/// |a_d| r^d - sum_{i<d} |a_i| r^i - 2 r, clamped below by 1. For |z| >= R,
/// |p(z)| >= |a_d||z|^d - sum |a_i||z|^i >= 2|z|. The polynomial in r has one
/// sign change, hence one positive root, and is positive beyond it.
inline double doubling_radius(const Polynomial& p) {
  const int d = p.degree();
  if (d < 2) throw Error(ErrorKind::InvalidArgument, "escape radius needs degree >= 2");
  auto f = [&](double r) {
    double s = std::abs(p.leading()) * std::pow(r, d) - 2.0 * r;
    for (int i = 0; i < d; ++i) s -= std::abs(p.coeff(i)) * std::pow(r, i);
    return s;
  };
  double hi = 1.0;
  while (f(hi) < 0.0) hi *= 2.0;
  double lo = hi / 2.0;
  if (f(lo) >= 0.0) lo = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 0.0 ? lo : hi) = mid;
  }
  return std::max(1.0, hi);
}

/// One generator of the semigroup: `base` iterated `iterate` times. Keeping the
/// iterate lazy avoids expanding f^m into 2^m coefficients.
struct Generator {
  std::string name;
  Polynomial base;
  int iterate = 1;

  int degree() const {
    int d = 1;
    for (int i = 0; i < iterate; ++i) d *= base.degree();
    return d;
  }

  Complex operator()(Complex z) const {
    for (int i = 0; i < iterate; ++i) z = base(z);
    return z;
  }

  /// Value and derivative via the chain rule.
  std::pair<Complex, Complex> eval_with_derivative(Complex z) const {
    Complex d{1.0, 0.0};
    for (int i = 0; i < iterate; ++i) {
      auto [v, dv] = base.eval_with_derivative(z);
      d *= dv;
      z = v;
    }
    return {z, d};
  }

  /// Value, first and second derivative: (f o g)'' = f''(g) g'^2 + f'(g) g''.
  std::array<Complex, 3> eval_with_derivatives2(Complex z) const {
    Complex d1{1.0, 0.0}, d2{};
    for (int i = 0; i < iterate; ++i) {
      auto [v, dv, ddv] = base.eval_with_derivatives2(z);
      d2 = ddv * d1 * d1 + dv * d2;
      d1 = dv * d1;
      z = v;
    }
    return {z, d1, d2};
  }

  /// Expanded coefficients; only sensible for small degrees.
  Polynomial expanded() const {
    Polynomial p = base;
    for (int i = 1; i < iterate; ++i) p = base.compose(p);
    return p;
  }

  /// Critical values of base^iterate: base^k(c) for critical points c of base
  /// and k = 1..iterate.
  std::vector<Complex> critical_values() const {
    std::vector<Complex> out;
    for (auto c : critical_points(base)) {
      Complex z = c;
      for (int k = 0; k < iterate; ++k) {
        z = base(z);
        out.push_back(z);
      }
    }
    return collapse_points(std::move(out), 1e-12);
  }

  /// Critical points of base^iterate: points z with base^j(z) critical for base,
  /// j < iterate.
  std::vector<Complex> critical_points_all() const {
    std::vector<Complex> level = critical_points(base);
    std::vector<Complex> out = level;
    for (int j = 1; j < iterate; ++j) {
      std::vector<Complex> next;
      for (auto w : level)
        for (auto z : preimages(base, w)) next.push_back(z);
      level = collapse_points(std::move(next));
      out.insert(out.end(), level.begin(), level.end());
    }
    return collapse_points(std::move(out));
  }

  double doubling_radius() const { return semijulia::doubling_radius(base); }
};

/// Index sequence (i_1, ..., i_n); the word map applies generator i_1 first.
struct Word {
  std::vector<std::size_t> indices;
};

/// Named finite family generating the semigroup.
class GeneratorSet {
 public:
  GeneratorSet() = default;

  explicit GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) throw Error(ErrorKind::InvalidArgument, "generator set is empty");
    escape_radius_ = 0.0;
    min_radius_ = INFINITY;
    for (const auto& g : gens_) {
      if (g.base.degree() < 2)
        throw Error(ErrorKind::InvalidArgument,
                    "generator '" + g.name + "' has degree < 2");
      if (g.iterate < 1)
        throw Error(ErrorKind::InvalidArgument, "generator '" + g.name + "' has iterate < 1");
      const double r = g.doubling_radius();
      escape_radius_ = std::max(escape_radius_, r);
      min_radius_ = std::min(min_radius_, r);
    }
  }

  /// Convenience: generators from plain polynomials named h1, h2, ...
  static GeneratorSet from_polynomials(const std::vector<Polynomial>& polys) {
    std::vector<Generator> g;
    for (std::size_t i = 0; i < polys.size(); ++i)
      g.push_back({"h" + std::to_string(i + 1), polys[i], 1});
    return GeneratorSet(std::move(g));
  }

  std::size_t size() const { return gens_.size(); }
  const Generator& operator[](std::size_t i) const { return gens_.at(i); }
  const std::vector<Generator>& generators() const { return gens_; }
  auto begin() const { return gens_.begin(); }
  auto end() const { return gens_.end(); }

  /// Every generator at least doubles modulus beyond this radius.
  double escape_radius() const { return escape_radius_; }

  /// Smallest per-generator doubling radius. Every point of the smallest
  /// filled-in Julia set lies in the closed disk of this radius, since outside
  /// it that generator's own iterates diverge.
  double min_generator_radius() const { return min_radius_; }

  void validate(const Word& w) const {
    if (w.indices.empty()) throw Error(ErrorKind::InvalidArgument, "word is empty");
    for (auto i : w.indices)
      if (i >= gens_.size())
        throw Error(ErrorKind::InvalidArgument,
                    "word index " + std::to_string(i) + " out of range");
  }

 private:
  std::vector<Generator> gens_;
  double escape_radius_ = 0.0;
  double min_radius_ = 0.0;
};

/// First step (1-based) whose value exceeded the escape radius.
struct Escaped {
  int step;
  friend bool operator==(const Escaped&, const Escaped&) = default;
};

using WordValue = std::variant<Complex, Escaped>;

/// Chained evaluation of the word map, stopping at the first intermediate
/// value of modulus greater than `escape_radius`.
inline WordValue eval_word(const GeneratorSet& gens, const Word& w, Complex z,
                           double escape_radius) {
  gens.validate(w);
  if (!(escape_radius >= 1.0))
    throw Error(ErrorKind::InvalidArgument, "escape radius must be >= 1");
  int step = 0;
  for (auto i : w.indices) {
    ++step;
    z = gens[i](z);
    if (!(std::abs(z) <= escape_radius)) return Escaped{step};
  }
  return z;
}

}  // namespace semijulia

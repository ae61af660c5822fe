#include <gtest/gtest.h>

#include <algorithm>
#include <numbers>
#include <random>

#include "semijulia/generator.hpp"
#include "semijulia/polynomial.hpp"

using namespace semijulia;

namespace {

// Expanded product of (z - r_i), built by repeated multiplication.
Polynomial from_roots(const std::vector<Complex>& roots, Complex lead = 1.0) {
  std::vector<Complex> c{lead};
  for (auto r : roots) {
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return Polynomial(c);
}

// Greedy matching distance between two multisets of points.
double match_error(std::vector<Complex> a, std::vector<Complex> b) {
  double worst = 0.0;
  for (auto z : a) {
    auto it = std::min_element(b.begin(), b.end(),
                               [&](Complex u, Complex v) { return std::abs(u - z) < std::abs(v - z); });
    worst = std::max(worst, std::abs(*it - z));
    b.erase(it);
  }
  return worst;
}

}  // namespace

TEST(Polynomial, HornerMatchesDirectSum) {
  const Polynomial p{Complex{1, 2}, Complex{-3, 0}, Complex{0, 1}, Complex{2, 0}};
  for (Complex z : {Complex{0.3, -0.7}, Complex{-2, 1.5}, Complex{4, 0}}) {
    Complex direct = 0.0;
    for (int i = 0; i <= 3; ++i) direct += p.coeff(i) * std::pow(z, i);
    EXPECT_LT(std::abs(p(z) - direct), 1e-12 * std::abs(direct) + 1e-12);
  }
}

TEST(Polynomial, TrailingZerosTrimmed) {
  const Polynomial p{Complex{1}, Complex{0}, Complex{2}, Complex{0}, Complex{0}};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.leading(), Complex(2));
}

TEST(Polynomial, ComposeAgreesWithNestedEvaluation) {
  const Polynomial f{Complex{-1}, Complex{0}, Complex{1}};
  const Polynomial g{Complex{0.5, 0.1}, Complex{2}, Complex{0}, Complex{1}};
  const Polynomial fg = f.compose(g);
  EXPECT_EQ(fg.degree(), 6);
  for (Complex z : {Complex{0.1, 0.2}, Complex{-1.3, 0.4}})
    EXPECT_LT(std::abs(fg(z) - f(g(z))), 1e-10);
}

TEST(Polynomial, DerivativeMatchesFiniteDifference) {
  const Polynomial p{Complex{2}, Complex{-1, 1}, Complex{0}, Complex{3}, Complex{0, -1}};
  const Complex z{0.4, -0.9};
  const double h = 1e-6;
  const Complex fd = (p(z + h) - p(z - h)) / (2 * h);
  EXPECT_LT(std::abs(p.derivative()(z) - fd), 1e-6);
  auto [v, dv] = p.eval_with_derivative(z);
  EXPECT_LT(std::abs(v - p(z)), 1e-12);
  EXPECT_LT(std::abs(dv - fd), 1e-6);
}

TEST(Roots, RecoversPrescribedRoots) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  for (int d = 3; d <= 9; ++d) {
    std::vector<Complex> roots;
    for (int i = 0; i < d; ++i) roots.emplace_back(u(rng), u(rng));
    const Polynomial p = from_roots(roots, Complex{0.7, -0.2});
    const auto found = polynomial_roots(p, 1e-8, 10.0);
    ASSERT_EQ(found.size(), static_cast<std::size_t>(d));
    EXPECT_LT(match_error(found, roots), 1e-7) << "degree " << d;
  }
}

TEST(Roots, BinomialClosedForm) {
  const auto r = polynomial_roots(Polynomial::monomial(1.0, 5) + Polynomial{Complex{-32}}, 1e-10, 32);
  ASSERT_EQ(r.size(), 5u);
  std::vector<Complex> expect;
  for (int k = 0; k < 5; ++k) expect.push_back(std::polar(2.0, 2 * std::numbers::pi * k / 5));
  EXPECT_LT(match_error(r, expect), 1e-12);
}

TEST(Roots, DoubleRootOfSquaredQuadratic) {
  // (z^2 - 1)^2 - 1 has roots ±sqrt(2) and a double root at 0.
  const Polynomial q{Complex{-1}, Complex{0}, Complex{1}};
  const Polynomial h = q * q + Polynomial{Complex{-1}};
  const auto r = polynomial_roots(h, 1e-8, 4);
  EXPECT_LT(match_error(r, {std::sqrt(2.0), -std::sqrt(2.0), 0.0, 0.0}), 1e-6);
}

TEST(Roots, PreimagesMapBack) {
  const Polynomial p{Complex{0.3, 0.1}, Complex{1, -1}, Complex{0}, Complex{2}};
  const Complex w{1.5, -0.25};
  const auto pre = preimages(p, w);
  ASSERT_EQ(pre.size(), 3u);
  for (auto z : pre) EXPECT_LT(std::abs(p(z) - w), 1e-10);
}

TEST(Roots, ZeroPolynomialIsRejected) {
  EXPECT_THROW(polynomial_roots(Polynomial{Complex{3}}, 1e-8, 1), Error);
}

TEST(CriticalPoints, MatchDerivativeRoots) {
  const Polynomial p{Complex{0}, Complex{-3}, Complex{0}, Complex{1}};  // z^3 - 3z
  auto cps = critical_points(p);
  EXPECT_LT(match_error(cps, {1.0, -1.0}), 1e-10);
  EXPECT_EQ(critical_points(Polynomial::monomial(2.0, 4)).size(), 1u);
}

TEST(Capacity, MonicIsOne) {
  EXPECT_DOUBLE_EQ(leading_capacity(Polynomial{Complex{0.25}, Complex{0}, Complex{1}}), 1.0);
  // a z^2: Julia set is |z| = 1/|a|.
  EXPECT_NEAR(leading_capacity(Polynomial::monomial(0.25, 2)), 4.0, 1e-12);
  EXPECT_NEAR(leading_capacity(Polynomial::monomial(1.0 / 64, 4)), 4.0, 1e-12);
  EXPECT_THROW(leading_capacity(Polynomial{Complex{1}, Complex{1}}), Error);
}

TEST(EscapeRadius, EveryPointBeyondDoubles) {
  const std::vector<Polynomial> polys{
      Polynomial{Complex{-1}, Complex{0}, Complex{1}},
      Polynomial::monomial(0.25, 2),
      Polynomial{Complex{0.5, 2}, Complex{-3}, Complex{0}, Complex{0, 1}},
  };
  for (const auto& p : polys) {
    const Generator g{"g", p, 1};
    const double R = g.doubling_radius();
    for (double scale : {1.0, 1.5, 4.0})
      for (int k = 0; k < 720; ++k) {
        const Complex z = std::polar(R * scale, 2 * std::numbers::pi * k / 720);
        EXPECT_GE(std::abs(p(z)), 2 * std::abs(z) * (1 - 1e-9));
      }
  }
}

TEST(Generator, LazyIterateMatchesExpansion) {
  const Generator g{"g", Polynomial{Complex{0.1}, Complex{0}, Complex{1}}, 3};
  EXPECT_EQ(g.degree(), 8);
  const Polynomial e = g.expanded();
  EXPECT_EQ(e.degree(), 8);
  const Complex z{0.3, 0.4};
  EXPECT_LT(std::abs(g(z) - e(z)), 1e-12);
  auto [v, dv] = g.eval_with_derivative(z);
  EXPECT_LT(std::abs(dv - e.derivative()(z)), 1e-10);
}

TEST(Generator, CriticalValuesOfIterate) {
  // (z^2)^2 = z^4: only critical value 0.
  const Generator g{"g", Polynomial::monomial(1.0, 2), 2};
  for (auto v : g.critical_values()) EXPECT_LT(std::abs(v), 1e-12);
}

TEST(GeneratorSet, RejectsLinearAndEmpty) {
  EXPECT_THROW(GeneratorSet(std::vector<Generator>{}), Error);
  EXPECT_THROW(GeneratorSet::from_polynomials({Polynomial{Complex{0}, Complex{2}}}), Error);
}

TEST(EvalWord, AppliesFirstIndexFirst) {
  const auto gens = GeneratorSet::from_polynomials(
      {Polynomial{Complex{1}, Complex{0}, Complex{1}}, Polynomial::monomial(2.0, 2)});
  const Complex z{0.1, 0.2};
  const auto v = eval_word(gens, Word{{0, 1}}, z, 100.0);
  ASSERT_TRUE(std::holds_alternative<Complex>(v));
  const Complex expect = 2.0 * (z * z + 1.0) * (z * z + 1.0);
  EXPECT_LT(std::abs(std::get<Complex>(v) - expect), 1e-12);
  const auto e = eval_word(gens, Word{{1, 1, 1, 1}}, 3.0, 10.0);
  ASSERT_TRUE(std::holds_alternative<Escaped>(e));
  EXPECT_EQ(std::get<Escaped>(e).step, 1);
  EXPECT_THROW(eval_word(gens, Word{{2}}, z, 10.0), Error);
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "semijulia/constructions.hpp"

using namespace semijulia;

namespace {

bool all_pass(const ConstructionResult& r) {
  for (const auto& c : r.assumption_checks)
    if (!c.pass) return false;
  return !r.assumption_checks.empty();
}

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorKind::Io;
}

}  // namespace

TEST(Cantor, SecondIteratesOfMonomials) {
  const auto c = cantor_circles(1.0, 0.25, 2, 2, 2, 2);
  ASSERT_EQ(c.gens.size(), 2u);
  const Complex z{0.7, -0.4};
  EXPECT_LT(std::abs(c.gens[0](z) - std::pow(z, 4)), 1e-14);
  EXPECT_LT(std::abs(c.gens[1](z) - std::pow(z, 4) / 64.0), 1e-14);
  // J(z^4/64) is |z| = 64^(1/3).
  EXPECT_NEAR(c.constant("radius_g1"), 1.0, 1e-14);
  EXPECT_NEAR(c.constant("radius_g2"), 4.0, 1e-12);
  // Pullbacks of 1 <= |z| <= 4: [1, sqrt 2] and [2 sqrt 2, 4].
  EXPECT_NEAR(c.constant("pullback_g1_outer"), std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(c.constant("pullback_g2_inner"), 2 * std::sqrt(2.0), 1e-12);
  EXPECT_TRUE(all_pass(c));
}

TEST(Cantor, TouchingAndCoincidentCircles) {
  // With m = 1 the pullbacks [1, 2] and [2, 4] touch.
  EXPECT_EQ(kind_of([] { cantor_circles(1.0, 0.25, 2, 2, 1, 1); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { cantor_circles(1.0, Complex{0, 1}, 2, 2, 2, 2); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { cantor_circles(1.0, 0.25, 1, 2, 2, 2); }), ErrorKind::InvalidArgument);
}

TEST(Figure1, GeneratorsAndPostcriticalSet) {
  const auto f = figure1_semigroup();
  const Complex z{0.3, 0.8};
  const Complex q = z * z - 1.0;
  EXPECT_LT(std::abs(f.gens[0](z) - (q * q - 1.0)), 1e-14);
  EXPECT_LT(std::abs(f.gens[1](z) - std::pow(z, 4) / 64.0), 1e-14);
  EXPECT_TRUE(all_pass(f));
  // Critical values 0 and -1 of h1 form a 2-cycle; h2 fixes 0 and sends -1 inward.
  EXPECT_LE(f.constant("postcritical_max_modulus"), 1.0 + 1e-12);
}

TEST(Hmin, IdentitiesForM2Five) {
  const auto g = hmin_geometry(5);
  // |z|^32 / sqrt(2)^31 = 1 on the unit circle.
  const double P = std::pow(2.0, 31.0 / 64.0);
  EXPECT_LE(std::abs(g.P - P) / P, 1e-12);
  const Complex c{g.eps};
  EXPECT_LE(std::abs(std::abs(Complex{-P * P} - c) - g.r), 1e-10);
  EXPECT_LE(std::abs(std::abs(Complex{P * P * P * P} - c) - g.r), 1e-10);
  // h2(P) lands on the unit circle J(h1), and h1^2(e^{i pi/4} P) = P^4.
  EXPECT_NEAR(std::abs(g.h2(P)), 1.0, 1e-12);
  const Complex w = std::polar(P, std::numbers::pi / 4);
  EXPECT_LT(std::abs(g.h1(g.h1(w)) - P * P * P * P), 1e-10);
  // The circle map fixes its own Julia circle.
  for (int k = 0; k < 16; ++k) {
    const Complex z = c + std::polar(g.r, 0.4 * k);
    EXPECT_NEAR(std::abs(g.f3(z) - c), g.r, 1e-9 * g.r);
  }
}

TEST(Hmin, PreimageOfCircleMissesCircle) {
  const auto g = hmin_geometry(5);
  // h1^-1(J(f3)) by direct square roots of circle points, 4096 samples.
  double nearest = INFINITY;
  for (int k = 0; k < 4096; ++k) {
    const Complex w = Complex{g.eps} + std::polar(g.r, 2 * std::numbers::pi * k / 4096);
    const Complex z = std::sqrt(-w);
    for (Complex p : {z, -z}) nearest = std::min(nearest, std::abs(std::abs(p - g.eps) - g.r));
  }
  EXPECT_GT(nearest, 0.0);
}

TEST(Hmin, MinimalIterate) {
  EXPECT_EQ(minimal_m3(5), 6);
  EXPECT_TRUE(all_pass(hmin_not(5, 6)));
  EXPECT_EQ(kind_of([] { hmin_not(5, 5); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { hmin_geometry(1); }), ErrorKind::InvalidArgument);
}

TEST(KComponents, AutoSweepFindsPassingExponents) {
  for (int k : {2, 3}) {
    const auto res = k_components_auto(k);
    EXPECT_TRUE(all_pass(res)) << "k = " << k;
    EXPECT_EQ(res.gens.size(), 4u);
    EXPECT_EQ(res.constant("k"), k);
    EXPECT_EQ(res.constant("l"), k - 2);
  }
  EXPECT_EQ(kind_of([] { k_components_auto(1); }), ErrorKind::InvalidArgument);
}

TEST(Nothyp, CriticalValueOnSecondJuliaCircle) {
  const double c = 0.1;
  const auto n = nothyp_pair(c, 1, 1);
  const double z0 = n.constant("z0");
  EXPECT_NEAR(z0 * z0 + c, z0, 1e-15);             // fixed point of z^2 + c
  EXPECT_LT(std::abs(2 * z0), 1.0);                // attracting
  const double rho = n.constant("rho");
  // The second map fixes z0 and doubles angles on C(z0, rho).
  EXPECT_NEAR(std::abs(n.gens[1](z0) - z0), 0.0, 1e-15);
  const Complex u = z0 + std::polar(rho, 0.7);
  const Complex v = n.gens[1](u);
  EXPECT_NEAR(std::abs(v - z0), rho, 1e-12);
  EXPECT_LT(std::abs((v - z0) - (u - z0) * (u - z0) / (c - z0)), 1e-12);
  EXPECT_NEAR(std::abs(c - z0), rho, 1e-15);  // critical value on J(h2)
  EXPECT_EQ(kind_of([] { nothyp_pair(0.3, 1, 1); }), ErrorKind::InvalidArgument);
}

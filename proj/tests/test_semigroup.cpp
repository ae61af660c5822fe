#include <gtest/gtest.h>

#include "semijulia/raster_ops.hpp"
#include "semijulia/semigroup.hpp"

using namespace semijulia;

namespace {

GeneratorSet quadratic(Complex c) {
  return GeneratorSet::from_polynomials({Polynomial{c, Complex{0}, Complex{1}}});
}

GeneratorSet cantor_pair() {
  return GeneratorSet::from_polynomials({Polynomial::monomial(1.0, 2), Polynomial::monomial(0.25, 2)});
}

}  // namespace

TEST(Postcritical, PeriodicCriticalOrbitIsBounded) {
  // z^2 - 1: 0 -> -1 -> 0.
  const auto r = postcritical_bounded_check(quadratic(-1.0), 12);
  EXPECT_TRUE(r.bounded());
  EXPECT_EQ(r.sample.points.size(), 2u);
}

TEST(Postcritical, EscapingOrbitGivesWitness) {
  // z^2 + 1: -> 1 -> 2 -> 5 ...
  const auto gens = quadratic(1.0);
  const auto r = postcritical_bounded_check(gens, 12);
  ASSERT_FALSE(r.bounded());
  ASSERT_TRUE(r.sample.escaped_witness.has_value());
  const auto& w = *r.sample.escaped_witness;
  EXPECT_GT(std::abs(w.escaped_point), gens.escape_radius());
  // Replaying the word from the critical value lands on the witness point.
  Complex z = w.critical_value;
  for (auto i : w.word.indices) z = gens[i](z);
  EXPECT_EQ(z, w.escaped_point);
}

TEST(Postcritical, MixedWordsCanEscape) {
  // Each map alone keeps 0 bounded (z^2 - 1 and z^2 + 0.25 at the cusp);
  // composing them does not.
  const auto gens = GeneratorSet::from_polynomials(
      {Polynomial{Complex{-1}, Complex{0}, Complex{1}}, Polynomial{Complex{0.25}, Complex{0}, Complex{1}}});
  EXPECT_FALSE(postcritical_bounded_check(gens, 12).bounded());
}

TEST(Postcritical, MonomialPairIsBounded) {
  EXPECT_TRUE(postcritical_bounded_check(cantor_pair(), 12).bounded());
  EXPECT_THROW(postcritical_bounded_check(cantor_pair(), 0), Error);
}

TEST(SmallestFilled, MonomialPairGivesUnitDisk) {
  // Orbits of |z| < 1 shrink under both maps; |z| > 1 escapes under z^2.
  const GridSpec g = GridSpec::square(0.0, 5.0, 256);
  const RasterSet k = smallest_filled_julia(cantor_pair(), g, 60);
  const RasterSet disk = disk_raster(g, 0.0, 1.0);
  EXPECT_LE(hausdorff_px(k, disk), 1.5);
}

TEST(SmallestFilled, SingleMapIsItsFilledJuliaSet) {
  const GridSpec g = GridSpec::square(0.0, 2.5, 200);
  const RasterSet k = smallest_filled_julia(quadratic(0.0), g, 80);
  EXPECT_LE(hausdorff_px(k, disk_raster(g, 0.0, 1.0)), 1.5);
}

TEST(SmallestFilled, WindowMustCoverTheDisk) {
  const GridSpec g = GridSpec::square(0.0, 0.5, 64);
  try {
    smallest_filled_julia(cantor_pair(), g, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(Pullback, CentreOnlyTestAgreesWithDirectEvaluation) {
  const GridSpec g = GridSpec::square(0.0, 2.0, 96);
  const auto gens = GeneratorSet::from_polynomials({Polynomial{Complex{-0.5}, Complex{0}, Complex{1}}});
  const RasterSet target = disk_raster(g, 0.3, 0.7);
  RasterSet all(g);
  std::fill(all.bits().begin(), all.bits().end(), 1);
  PullbackOptions opt;
  opt.derivative_reach = false;
  opt.slack_px = 3.0;
  PullbackKernel k(gens.generators(), g, all, g, opt);
  const RasterSet got = k.apply(DistanceField(target), Quantifier::Any);
  // Oracle: the image centre's pixel distance to the nearest target centre.
  // The kernel interpolates a 1-Lipschitz field bilinearly, so it may differ
  // from the exact distance by up to one pixel diagonal.
  const double d = g.delta();
  const double band = std::sqrt(2.0);
  int mismatches = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const Complex w = gens[0](g.center(i));
    double best = INFINITY;
    for (std::size_t j = 0; j < target.size(); ++j)
      if (target[j]) best = std::min(best, std::abs(w - g.center(j)) / d);
    if (best <= 3.0 - band && !got[i]) ++mismatches;
    if (best > 3.0 + band && got[i]) ++mismatches;
  }
  EXPECT_EQ(mismatches, 0);
}

TEST(Pullback, DerivativeReachIsSuperset) {
  const GridSpec g = GridSpec::square(0.0, 2.0, 96);
  const auto gens = cantor_pair();
  const RasterSet target = circle_raster(g, 0.0, 1.0);
  RasterSet all(g);
  std::fill(all.bits().begin(), all.bits().end(), 1);
  PullbackOptions centre;
  centre.derivative_reach = false;
  const RasterSet a = PullbackKernel(gens.generators(), g, all, g, centre).apply(DistanceField(target), Quantifier::Any);
  const RasterSet b = PullbackKernel(gens.generators(), g, all, g).apply(DistanceField(target), Quantifier::Any);
  EXPECT_TRUE(a.subset_of(b));
}

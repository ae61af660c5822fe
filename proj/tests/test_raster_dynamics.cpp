#include <gtest/gtest.h>

#include <cmath>

#include "semijulia/raster_dynamics.hpp"
#include "semijulia/topology.hpp"

using namespace semijulia;

namespace {

GeneratorSet square_map() { return GeneratorSet::from_polynomials({Polynomial::monomial(1.0, 2)}); }

GeneratorSet cantor_pair() {
  return GeneratorSet::from_polynomials({Polynomial::monomial(1.0, 2), Polynomial::monomial(0.25, 2)});
}

// Second iterates z^4 and z^4/64: the two pullbacks of the annulus
// 1 <= |z| <= 4 are separated, so the Julia set is a Cantor set of circles.
GeneratorSet separated_pair() {
  return GeneratorSet({{"g1", Polynomial::monomial(1.0, 2), 2}, {"g2", Polynomial::monomial(0.25, 2), 2}});
}

// J(z^2) is the circle of radius 1/|a|^{1/(d-1)} = 1.
RasterSet unit_circle(const GridSpec& g) {
  return circle_raster(g, 0.0, leading_capacity(Polynomial::monomial(1.0, 2)));
}

}  // namespace

TEST(Survivor, SquareMapGivesUnitCircle) {
  const GridSpec g = GridSpec::square(0.0, 2.5, 256);
  const auto gens = square_map();
  const RasterSet j = julia_survivor(gens, g, default_survivor_seed(gens, g), 40);
  EXPECT_LE(hausdorff_px(j, unit_circle(g)), 2.0);
}

TEST(Survivor, IterationZeroReturnsSeed) {
  const GridSpec g = GridSpec::square(0.0, 2.5, 64);
  const auto gens = square_map();
  const RasterSet seed = default_survivor_seed(gens, g);
  EXPECT_EQ(julia_survivor(gens, g, seed, 0), seed);
  EXPECT_THROW(julia_survivor(gens, g, RasterSet(g), 3), Error);
}

TEST(Survivor, CantorPairSplitsIntoAnnuli) {
  // After n steps the survivor is a union of 2^n nested annuli.
  const GridSpec g = GridSpec::square(0.0, 5.0, 1024);
  const auto gens = separated_pair();
  const RasterSet seed = default_survivor_seed(gens, g);
  for (int n = 1; n <= 3; ++n) {
    const auto labels = label_components(julia_survivor(gens, g, seed, n));
    EXPECT_EQ(labels.count, 1 << n) << "n = " << n;
  }
}

TEST(Chaos, SquareMapLandsOnCircle) {
  const GridSpec g = GridSpec::square(0.0, 2.5, 256);
  const RasterSet j = julia_chaos(square_map(), std::nullopt, 200000, g, 1);
  EXPECT_LE(hausdorff_px(j, unit_circle(g)), 2.0);
}

TEST(Chaos, SameSeedSameRaster) {
  const GridSpec g = GridSpec::square(0.0, 5.0, 128);
  const auto gens = cantor_pair();
  EXPECT_EQ(julia_chaos(gens, std::nullopt, 50000, g, 9), julia_chaos(gens, std::nullopt, 50000, g, 9));
  EXPECT_NE(julia_chaos(gens, std::nullopt, 50000, g, 9), julia_chaos(gens, std::nullopt, 50000, g, 10));
}

TEST(Chaos, DefaultStartIsRepellingFixedPoint) {
  const auto gens = GeneratorSet::from_polynomials({Polynomial{Complex{-1}, Complex{0}, Complex{1}}});
  const Complex z = default_chaos_start(gens);
  EXPECT_LT(std::abs(gens[0](z) - z), 1e-10);
  EXPECT_GT(std::abs(gens[0].base.derivative()(z)), 1.0);
}

TEST(WordUnion, SquareMapGivesUnitCircle) {
  const GridSpec g = GridSpec::square(0.0, 2.5, 256);
  const RasterSet j = julia_word_union(square_map(), 3, g);
  EXPECT_LE(hausdorff_px(j, unit_circle(g)), 2.0);
}

TEST(WordUnion, BudgetIsEnforced) {
  const GridSpec g = GridSpec::square(0.0, 5.0, 32);
  WordUnionOptions opt;
  opt.budget = 10;
  try {
    julia_word_union(cantor_pair(), 4, g, 50, opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Resource);
    EXPECT_EQ(e.metric(), 30.0);
  }
}

TEST(WordFilled, CompositionRadius) {
  // g2 o g1 (z) = z^4 / 4 has filled Julia set |z| <= 4^{1/3}.
  const GridSpec g = GridSpec::square(0.0, 5.0, 256);
  const RasterSet k = word_filled_julia(cantor_pair(), Word{{0, 1}}, g, 100);
  EXPECT_LE(hausdorff_px(boundary4(k), circle_raster(g, 0.0, std::cbrt(4.0))), 1.5);
}

TEST(GeneratorJulia, MonomialCircles) {
  const GridSpec g = GridSpec::square(0.0, 5.0, 256);
  EXPECT_LE(hausdorff_px(generator_julia(cantor_pair(), 1, g), circle_raster(g, 0.0, 4.0)), 1.5);
  EXPECT_THROW(generator_julia(cantor_pair(), 2, g), Error);
}

TEST(Fiberwise, PrefixCutsEscapeDisk) {
  const GridSpec g = GridSpec::square(0.0, 5.0, 256);
  const auto gens = cantor_pair();
  const double R = gens.escape_radius();
  // |z| <= R and |z^2| <= R.
  const RasterSet f = fiberwise_filled(gens, TrajectoryPrefix{{0}}, g);
  EXPECT_LE(hausdorff_px(boundary4(f), circle_raster(g, 0.0, std::min(R, std::sqrt(R)))), 1.5);
  EXPECT_THROW(fiberwise_filled(gens, TrajectoryPrefix{{}}, g), Error);
  EXPECT_THROW(fiberwise_filled(gens, TrajectoryPrefix{{3}}, g), Error);
}

TEST(Preimage, CircleUnderQuarterSquare) {
  // z^2/4 maps |z| = 2 onto |z| = 1.
  const GridSpec g = GridSpec::square(0.0, 3.0, 256);
  const RasterSet pre = preimage_raster(Polynomial::monomial(0.25, 2), circle_raster(g, 0.0, 1.0), g);
  const RasterSet exact = circle_raster(g, 0.0, 2.0);
  // Cells are matched with one pixel of slack plus their own image radius,
  // so the preimage is a thickened circle.
  EXPECT_TRUE(exact.subset_of(pre));
  EXPECT_LE(directed_hausdorff_px(pre, exact), 2.5);
}

TEST(SplitMix, KnownSequence) {
  // Reference values of splitmix64 seeded with 0.
  SplitMix64 r(0);
  EXPECT_EQ(r.next(), 0xE220A8397B1DCDAFULL);
  EXPECT_EQ(r.next(), 0x6E789E6AA1B965F4ULL);
}

#include <gtest/gtest.h>

#include "semijulia/verify.hpp"

using namespace semijulia;

namespace {

Json small_suite(const char* checks) {
  Json j = parse_json_text(std::string(R"({"name":"t","construction":{"name":"cantor"},
    "grid":{"size":384},"algorithms":["survivor"],"params":{"iters":20},"checks":)") + checks + "}");
  return j;
}

GeneratorSet square_map() { return GeneratorSet::from_polynomials({Polynomial::monomial(1.0, 2)}); }

}  // namespace

TEST(Invariance, CircleIsBackwardInvariant) {
  const GridSpec g = GridSpec::square(0.0, 2.5, 256);
  const auto rep = check_invariance(square_map(), circle_raster(g, 0.0, 1.0));
  EXPECT_TRUE(rep.pass());
  // A circle of the wrong radius is not.
  const auto bad = check_invariance(square_map(), circle_raster(g, 0.0, 1.5));
  EXPECT_FALSE(bad.pass());
}

TEST(Hyperbolic, BasilicaPassesDendriteFails) {
  // The window covers the escape disk, so the seed excludes the filled set.
  const GridSpec g = GridSpec::square(0.0, 2.5, 320);
  // z^2 - 1: postcritical 2-cycle {0, -1} sits in superattracting basins.
  const auto basilica = GeneratorSet::from_polynomials({Polynomial{Complex{-1}, Complex{0}, Complex{1}}});
  const RasterSet jb = julia_survivor(basilica, g, default_survivor_seed(basilica, g), 60);
  const auto rb = check_hyperbolic(basilica, jb);
  EXPECT_TRUE(rb.pass()) << rb.to_json().dump(2);
  // z^2 + i: the critical value is preperiodic and lies on the dendrite J.
  const auto dendrite = GeneratorSet::from_polynomials({Polynomial{Complex{0, 1}, Complex{0}, Complex{1}}});
  const RasterSet jd = julia_survivor(dendrite, g, default_survivor_seed(dendrite, g), 60);
  const auto rep = check_hyperbolic(dendrite, jd);
  ASSERT_EQ(rep.checks.size(), 1u);
  EXPECT_EQ(rep.checks[0].verdict, Verdict::Fail);
  EXPECT_LE(rep.checks[0].metric, 1.0);
  EXPECT_FALSE(rep.checks[0].witness.is_null());
}

TEST(CrossAlgorithm, IdenticalRastersPass) {
  const GridSpec g = GridSpec::square(0.0, 2.5, 64);
  const RasterSet c = circle_raster(g, 0.0, 1.0);
  EXPECT_EQ(check_cross_algorithm({{"a", c}, {"b", c}}).verdict, Verdict::Pass);
  EXPECT_EQ(check_cross_algorithm({{"a", c}, {"b", circle_raster(g, 0.0, 2.0)}}).verdict, Verdict::Fail);
}

TEST(Suite, CantorPassesAndIsDeterministic) {
  const Json cfg = small_suite(R"(["invariance","structure","hyperbolic"])");
  const Report a = run_suite(cfg);
  EXPECT_TRUE(a.pass()) << a.to_json().dump(2);
  EXPECT_EQ(exit_code(a), 0);
  EXPECT_EQ(a.to_json().dump(), run_suite(cfg).to_json().dump());
}

TEST(Suite, ExpectFailInvertsVerdict) {
  // Cantor circles are hyperbolic, so an expected failure becomes a failure.
  const Report r = run_suite(small_suite(R"([{"check":"hyperbolic","expect":"fail"}])"));
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(exit_code(r), 1);
  EXPECT_NE(r.checks[0].name.find("expected to fail"), std::string::npos);
}

TEST(Suite, ConfigErrorsAreParseErrors) {
  for (const char* checks : {R"(["nonsense"])", R"("invariance")", R"([{"check":"hyperbolic","generators":["zz"]}])"}) {
    try {
      run_suite(small_suite(checks));
      ADD_FAILURE() << checks;
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::Parse) << checks;
    }
  }
  Json bad = small_suite(R"(["invariance"])");
  bad["construction"] = Json{{"name", "nowhere"}};
  EXPECT_THROW(run_suite(bad), Error);
}

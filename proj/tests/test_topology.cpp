#include <gtest/gtest.h>

#include "semijulia/topology.hpp"

using namespace semijulia;

namespace {

const GridSpec kGrid = GridSpec::square(0.0, 4.0, 200);

RasterSet rings(std::initializer_list<double> radii, Complex c = 0.0) {
  RasterSet r(kGrid);
  for (double rad : radii) r |= circle_raster(kGrid, c, rad);
  return r;
}

// Flood-fill count by BFS, used as an independent labelling oracle.
int count_components_bfs(const RasterSet& r, bool eight) {
  const int w = r.width(), h = r.height();
  std::vector<char> seen(r.size(), 0);
  int n = 0;
  for (std::size_t s = 0; s < r.size(); ++s) {
    if (!r[s] || seen[s]) continue;
    ++n;
    std::vector<std::size_t> stack{s};
    seen[s] = 1;
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      const int x = int(i % w), y = int(i / w);
      for (int dy = -1; dy <= 1; ++dy)
        for (int dx = -1; dx <= 1; ++dx) {
          if ((dx == 0 && dy == 0) || (!eight && dx != 0 && dy != 0)) continue;
          const int nx = x + dx, ny = y + dy;
          if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
          const std::size_t j = std::size_t(ny) * w + nx;
          if (r[j] && !seen[j]) {
            seen[j] = 1;
            stack.push_back(j);
          }
        }
    }
  }
  return n;
}

}  // namespace

TEST(Labels, MatchFloodFill) {
  const RasterSet r = rings({0.5, 1.0, 2.0}) | rings({0.3}, Complex{2.8, 2.8});
  const auto l = label_components(r);
  EXPECT_EQ(l.count, count_components_bfs(r, true));
  EXPECT_EQ(l.count, 4);
  std::size_t total = 0;
  for (auto p : l.pixels) total += p;
  EXPECT_EQ(total, r.count());
}

TEST(Labels, DiagonalPixelsJoinForegroundNotBackground) {
  RasterSet r(GridSpec::square(0.0, 1.0, 4));
  r.set(0, 0);
  r.set(1, 1);
  EXPECT_EQ(label_components(r).count, 1);
  RasterSet gap(GridSpec::square(0.0, 1.0, 4));
  for (int i = 0; i < 4; ++i) gap.set(i, 3 - i);  // anti-diagonal
  // The background splits into two 4-connected pieces across the diagonal.
  EXPECT_EQ(label_background(gap).count, 2);
}

TEST(Labels, ComponentRasterHasItsPixels) {
  const auto l = label_components(rings({1.0, 2.0}));
  for (int id = 1; id <= l.count; ++id) EXPECT_EQ(l.component(id).count(), l.pixels[id - 1]);
}

TEST(Jordan, CircleIsArcIsNot) {
  EXPECT_TRUE(is_jordan_curve(rings({1.5})));
  RasterSet arc(kGrid);
  const RasterSet c = rings({1.5});
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] && kGrid.center(i).imag() > 0) arc.set(i);
  EXPECT_FALSE(is_jordan_curve(arc));
  EXPECT_FALSE(is_jordan_curve(rings({1.0, 2.0})));  // three complementary regions
}

TEST(Hull, RingFillsToDisk) {
  const auto h = polynomial_hull_raster(rings({1.5}));
  EXPECT_FALSE(h.truncated);
  EXPECT_LE(hausdorff_px(h.hull, disk_raster(kGrid, 0.0, 1.5)), 1.0);
  RasterSet cut = disk_raster(kGrid, 0.0, 5.0);
  EXPECT_TRUE(polynomial_hull_raster(boundary4(cut)).truncated);
}

TEST(Order, NestedSideBySideAndTouching) {
  const RasterSet small = rings({0.5}), big = rings({2.0});
  EXPECT_EQ(surrounding_compare(small, big).relation, OrderRelation::Less);
  EXPECT_EQ(surrounding_compare(big, small).relation, OrderRelation::Greater);
  const RasterSet left = rings({0.5}, Complex{-2, 0}), right = rings({0.5}, Complex{2, 0});
  EXPECT_EQ(surrounding_compare(left, right).relation, OrderRelation::Outside);
  const auto hit = surrounding_compare(rings({1.0}), rings({1.0}, Complex{0.5, 0}));
  EXPECT_EQ(hit.relation, OrderRelation::Intersects);
  ASSERT_TRUE(hit.witness.has_value());
}

TEST(Order, NestedRingsAreTotallyOrderedInnermostFirst) {
  const auto l = label_components(rings({3.0, 0.5, 1.5}));
  const auto ord = order_components(l, 0.0);
  ASSERT_TRUE(ord.total);
  ASSERT_EQ(ord.order.size(), 3u);
  // Innermost component is the one with the fewest pixels here.
  for (std::size_t k = 0; k + 1 < ord.order.size(); ++k)
    EXPECT_LT(l.pixels[ord.order[k] - 1], l.pixels[ord.order[k + 1] - 1]);
}

TEST(Order, SideBySideIsNotTotal) {
  const auto l = label_components(rings({0.5}, Complex{-2, 0}) | rings({0.5}, Complex{2, 0}));
  // A total order would need a point inside every hull.
  try {
    order_components(l, Complex{-2, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Domain);
  }
}

TEST(Order, AnchorMustSitInsideEveryHull) {
  const auto l = label_components(rings({0.4}, Complex{-1.2, 0}) | rings({3.0}));
  EXPECT_THROW(order_components(l, 0.0), Error);
  EXPECT_TRUE(order_components(l, Complex{-1.2, 0}).total);
  EXPECT_THROW(order_components(l, Complex{9, 9}), Error);
}

TEST(Fatou, HoleCounts) {
  // Two nested circles: inner disk, annulus, outside.
  auto f = classify_fatou_components(rings({1.0, 2.5}), 0);
  ASSERT_EQ(f.size(), 3u);
  int simple = 0, doubly = 0;
  for (const auto& c : f) {
    simple += c.kind == FatouClass::SimplyConnected;
    doubly += c.kind == FatouClass::DoublyConnected;
  }
  EXPECT_EQ(simple, 2);
  EXPECT_EQ(doubly, 1);
  // Three disjoint circles: the unbounded region has three holes.
  const RasterSet three = rings({0.5}, Complex{-2.5, 0}) | rings({0.5}) | rings({0.5}, Complex{2.5, 0});
  int other = 0;
  for (const auto& c : classify_fatou_components(three, 0)) other += c.kind == FatouClass::Other;
  EXPECT_EQ(other, 1);
}

TEST(Extremes, JminTouchesKhatJmaxOutermost) {
  const RasterSet julia = rings({1.0, 2.0, 3.0});
  const auto l = label_components(julia);
  const auto ext = find_jmin_jmax(l, julia, disk_raster(kGrid, 0.0, 1.0));
  EXPECT_EQ(ext.jmin, l.label[kGrid.pixel_of(Complex{1.0, 0})]);
  EXPECT_EQ(ext.jmax, l.label[kGrid.pixel_of(Complex{3.0, 0})]);
  EXPECT_THROW(find_jmin_jmax(l, julia, RasterSet(kGrid)), Error);
}

TEST(Containment, GeneratorRastersLandInExtremes) {
  const RasterSet julia = rings({1.0, 2.0, 3.0});
  const auto l = label_components(julia);
  const auto ext = find_jmin_jmax(l, julia, disk_raster(kGrid, 0.0, 1.0));
  const auto rep = containment_report(l, {rings({1.0}), rings({3.0})}, ext);
  ASSERT_EQ(rep.components.size(), 3u);
  ASSERT_TRUE(rep.jmin_contains_m_prime.has_value());
  EXPECT_TRUE(*rep.jmin_contains_m_prime);
  EXPECT_TRUE(*rep.jmax_contains_m_double_prime);
  ASSERT_EQ(rep.b_min.size(), 1u);
  EXPECT_EQ(rep.b_min[0], 0u);
  // The middle ring holds no generator raster.
  for (const auto& c : rep.components) {
    if (c.id != ext.jmin && c.id != ext.jmax) {
      EXPECT_FALSE(c.star_lambda);
    }
  }
}

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "semijulia/raster_dynamics.hpp"
#include "semijulia/raster_ops.hpp"

namespace semijulia {

struct BBox {
  int col0 = 0, row0 = 0, col1 = -1, row1 = -1;  // inclusive
  friend bool operator==(const BBox&, const BBox&) = default;
};

/// Labels 1..count in first-scanned order; 0 is background.
struct ComponentLabels {
  GridSpec grid;
  std::vector<std::int32_t> label;
  int count = 0;
  std::vector<std::size_t> pixels;  // index id-1
  std::vector<BBox> bbox;           // index id-1

  RasterSet component(int id) const {
    check(id);
    RasterSet r(grid);
    for (std::size_t i = 0; i < label.size(); ++i)
      if (label[i] == id) r.set(i);
    return r;
  }

  std::vector<std::size_t> pixel_list(int id) const {
    check(id);
    std::vector<std::size_t> out;
    out.reserve(pixels[id - 1]);
    const BBox& b = bbox[id - 1];
    for (int y = b.row0; y <= b.row1; ++y)
      for (int x = b.col0; x <= b.col1; ++x) {
        const std::size_t i = static_cast<std::size_t>(y) * grid.width + x;
        if (label[i] == id) out.push_back(i);
      }
    return out;
  }

  void check(int id) const {
    if (id < 1 || id > count)
      throw Error(ErrorKind::InvalidArgument, "component id " + std::to_string(id) + " out of range");
  }
};

enum class Connectivity { Four, Eight };

namespace detail {

struct UnionFind {
  std::vector<std::int32_t> parent;
  std::int32_t make() {
    parent.push_back(static_cast<std::int32_t>(parent.size()));
    return parent.back();
  }
  std::int32_t find(std::int32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

/// Two-pass labelling of pixels where mask[i] == value.
inline ComponentLabels label_mask(const GridSpec& grid, const std::vector<std::uint8_t>& mask,
                                  std::uint8_t value, Connectivity conn) {
  const int w = grid.width, h = grid.height;
  std::vector<std::int32_t> prov(mask.size(), -1);
  UnionFind uf;
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      if (mask[i] != value) continue;
      std::int32_t lab = -1;
      auto visit = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w) return;
        const std::int32_t o = prov[static_cast<std::size_t>(ny) * w + nx];
        if (o < 0) return;
        if (lab < 0)
          lab = o;
        else
          uf.unite(lab, o);
      };
      visit(x - 1, y);
      visit(x, y - 1);
      if (conn == Connectivity::Eight) {
        visit(x - 1, y - 1);
        visit(x + 1, y - 1);
      }
      prov[i] = lab >= 0 ? lab : uf.make();
    }
  ComponentLabels out;
  out.grid = grid;
  out.label.assign(mask.size(), 0);
  std::vector<std::int32_t> final_id(uf.parent.size(), 0);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      if (prov[i] < 0) continue;
      const std::int32_t root = uf.find(prov[i]);
      if (final_id[root] == 0) {
        final_id[root] = ++out.count;
        out.pixels.push_back(0);
        out.bbox.push_back({x, y, x, y});
      }
      const int id = final_id[root];
      out.label[i] = id;
      ++out.pixels[id - 1];
      BBox& b = out.bbox[id - 1];
      b.col0 = std::min(b.col0, x);
      b.col1 = std::max(b.col1, x);
      b.row0 = std::min(b.row0, y);
      b.row1 = std::max(b.row1, y);
    }
  return out;
}

/// Member pixels of `r` surrounded by a one-pixel non-member frame.
inline RasterSet pad_frame(const RasterSet& r) {
  const GridSpec& g = r.grid();
  const double d = g.delta();
  RasterSet out(GridSpec::make(g.xmin - d, g.xmax + d, g.ymin - d, g.ymax + d, g.width + 2,
                               g.height + 2));
  for (int y = 0; y < g.height; ++y)
    for (int x = 0; x < g.width; ++x)
      if (r.at(x, y)) out.set(x + 1, y + 1);
  return out;
}

/// Hull of one component restricted to its bounding box plus a virtual
/// one-pixel frame: pixels of the box not 4-reachable from the frame through
/// non-members of the component.
struct LocalHull {
  BBox box;
  std::vector<std::uint8_t> inside;  // over the (unpadded) box

  bool contains(const GridSpec& g, std::size_t idx) const {
    const int x = static_cast<int>(idx % g.width), y = static_cast<int>(idx / g.width);
    if (x < box.col0 || x > box.col1 || y < box.row0 || y > box.row1) return false;
    return inside[static_cast<std::size_t>(y - box.row0) * (box.col1 - box.col0 + 1) +
                  (x - box.col0)] != 0;
  }
};

template <class IsMember>
LocalHull local_hull(const BBox& box, IsMember&& member) {
  const int bw = box.col1 - box.col0 + 1, bh = box.row1 - box.row0 + 1;
  const int pw = bw + 2, ph = bh + 2;
  std::vector<std::uint8_t> reached(static_cast<std::size_t>(pw) * ph, 0);
  std::vector<std::int32_t> stack;
  auto blocked = [&](int px, int py) {
    if (px == 0 || py == 0 || px == pw - 1 || py == ph - 1) return false;
    return member(box.col0 + px - 1, box.row0 + py - 1);
  };
  auto push = [&](int px, int py) {
    if (px < 0 || py < 0 || px >= pw || py >= ph) return;
    const std::size_t k = static_cast<std::size_t>(py) * pw + px;
    if (reached[k] || blocked(px, py)) return;
    reached[k] = 1;
    stack.push_back(static_cast<std::int32_t>(k));
  };
  push(0, 0);
  while (!stack.empty()) {
    const std::int32_t k = stack.back();
    stack.pop_back();
    const int px = k % pw, py = k / pw;
    push(px - 1, py);
    push(px + 1, py);
    push(px, py - 1);
    push(px, py + 1);
  }
  LocalHull hull{box, std::vector<std::uint8_t>(static_cast<std::size_t>(bw) * bh, 0)};
  for (int y = 0; y < bh; ++y)
    for (int x = 0; x < bw; ++x)
      hull.inside[static_cast<std::size_t>(y) * bw + x] =
          !reached[static_cast<std::size_t>(y + 1) * pw + (x + 1)];
  return hull;
}

inline BBox raster_bbox(const RasterSet& r) {
  BBox b{r.width(), r.height(), -1, -1};
  for (int y = 0; y < r.height(); ++y)
    for (int x = 0; x < r.width(); ++x)
      if (r.at(x, y)) {
        b.col0 = std::min(b.col0, x);
        b.col1 = std::max(b.col1, x);
        b.row0 = std::min(b.row0, y);
        b.row1 = std::max(b.row1, y);
      }
  return b;
}

}  // namespace detail

/// 8-connected components of the members of r.
inline ComponentLabels label_components(const RasterSet& r) {
  return detail::label_mask(r.grid(), r.bits(), 1, Connectivity::Eight);
}

/// 4-connected components of the non-members of r.
inline ComponentLabels label_background(const RasterSet& r) {
  return detail::label_mask(r.grid(), r.bits(), 0, Connectivity::Four);
}

// ---- hulls ----------------------------------------------------------------

struct HullResult {
  RasterSet hull;
  /// The set touches the window edge, so complementary regions beyond the
  /// window were not seen.
  bool truncated = false;
};

/// The set plus every pixel not 4-connected to the window border through
/// non-members.
inline HullResult polynomial_hull_raster(const RasterSet& c) {
  if (c.empty()) throw Error(ErrorKind::InvalidArgument, "hull of an empty raster");
  const BBox box = detail::raster_bbox(c);
  const auto local = detail::local_hull(box, [&](int x, int y) { return c.at(x, y); });
  HullResult res{RasterSet(c.grid()), box.col0 == 0 || box.row0 == 0 ||
                                          box.col1 == c.width() - 1 ||
                                          box.row1 == c.height() - 1};
  for (int y = box.row0; y <= box.row1; ++y)
    for (int x = box.col0; x <= box.col1; ++x)
      if (local.contains(c.grid(), static_cast<std::size_t>(y) * c.width() + x)) res.hull.set(x, y);
  return res;
}

// ---- surrounding order ----------------------------------------------------

enum class OrderRelation { Less, Greater, Outside, Intersects };

inline const char* to_string(OrderRelation r) {
  switch (r) {
    case OrderRelation::Less: return "Less";
    case OrderRelation::Greater: return "Greater";
    case OrderRelation::Outside: return "Outside";
    case OrderRelation::Intersects: return "Intersects";
  }
  return "?";
}

struct OrderVerdict {
  OrderRelation relation;
  std::optional<std::size_t> witness;  // pixel index
};

/// Intersects when some pixel of c1 lies within one pixel (Chebyshev) of c2;
/// Less when c1 sits in a bounded complementary region of c2, Greater in the
/// mirrored case, otherwise Outside.
inline OrderVerdict surrounding_compare(const RasterSet& c1, const RasterSet& c2) {
  c1.check_same(c2);
  if (c1.empty() || c2.empty())
    throw Error(ErrorKind::InvalidArgument, "surrounding order of an empty raster");
  const RasterSet near2 = dilate(c2, 1);
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (c1[i] && near2[i]) return {OrderRelation::Intersects, i};
  const RasterSet h2 = polynomial_hull_raster(c2).hull;
  if (c1.subset_of(h2)) return {OrderRelation::Less, std::nullopt};
  const RasterSet h1 = polynomial_hull_raster(c1).hull;
  if (c2.subset_of(h1)) return {OrderRelation::Greater, std::nullopt};
  for (std::size_t i = 0; i < c1.size(); ++i)
    if (c1[i]) return {OrderRelation::Outside, i};
  return {OrderRelation::Outside, std::nullopt};
}

struct OrderResult {
  bool total = false;
  std::vector<int> order;                       // innermost first when total
  std::optional<std::pair<int, int>> violation;  // first adjacent pair not Less
  std::optional<OrderRelation> violation_relation;
};

namespace detail {

/// Comparison of two components of one labelling via their local hulls.
inline OrderRelation compare_labelled(const ComponentLabels& l, int a, int b,
                                      const std::vector<LocalHull>& hulls,
                                      const std::vector<std::vector<std::size_t>>& px) {
  const int w = l.grid.width, h = l.grid.height;
  for (auto i : px[a - 1]) {
    const int x = static_cast<int>(i % w), y = static_cast<int>(i / w);
    for (int dy = -1; dy <= 1; ++dy)
      for (int dx = -1; dx <= 1; ++dx) {
        const int nx = x + dx, ny = y + dy;
        if (nx >= 0 && ny >= 0 && nx < w && ny < h &&
            l.label[static_cast<std::size_t>(ny) * w + nx] == b)
          return OrderRelation::Intersects;
      }
  }
  auto inside = [&](int p, int q) {
    for (auto i : px[p - 1])
      if (!hulls[q - 1].contains(l.grid, i)) return false;
    return true;
  };
  if (inside(a, b)) return OrderRelation::Less;
  if (inside(b, a)) return OrderRelation::Greater;
  return OrderRelation::Outside;
}

}  // namespace detail

/// Sorts components by distance from `anchor` and checks that each adjacent
/// pair is strictly nested.
inline OrderResult order_components(const ComponentLabels& l, Complex anchor) {
  OrderResult res;
  if (l.count == 0) {
    res.total = true;
    return res;
  }
  const auto apx = l.grid.pixel_of(anchor);
  if (apx < 0) throw Error(ErrorKind::Domain, "order anchor lies outside the window");
  std::vector<detail::LocalHull> hulls;
  std::vector<std::vector<std::size_t>> px;
  std::vector<double> dist(static_cast<std::size_t>(l.count));
  for (int id = 1; id <= l.count; ++id) {
    const BBox& box = l.bbox[id - 1];
    hulls.push_back(detail::local_hull(box, [&](int x, int y) {
      return l.label[static_cast<std::size_t>(y) * l.grid.width + x] == id;
    }));
    if (!hulls.back().contains(l.grid, static_cast<std::size_t>(apx)))
      throw Error(ErrorKind::Domain,
                  "order anchor is not in the hull of component " + std::to_string(id),
                  static_cast<double>(id));
    px.push_back(l.pixel_list(id));
    double best = INFINITY;
    for (auto i : px.back()) best = std::min(best, std::abs(l.grid.center(i) - anchor));
    dist[id - 1] = best;
  }
  res.order.resize(static_cast<std::size_t>(l.count));
  std::iota(res.order.begin(), res.order.end(), 1);
  std::stable_sort(res.order.begin(), res.order.end(),
                   [&](int a, int b) { return dist[a - 1] < dist[b - 1]; });
  for (std::size_t k = 0; k + 1 < res.order.size(); ++k) {
    const auto rel = detail::compare_labelled(l, res.order[k], res.order[k + 1], hulls, px);
    if (rel != OrderRelation::Less) {
      res.violation = std::make_pair(res.order[k], res.order[k + 1]);
      res.violation_relation = rel;
      return res;
    }
  }
  res.total = true;
  return res;
}

// ---- complementary regions ------------------------------------------------

enum class FatouClass { SimplyConnected, DoublyConnected, Other };

inline const char* to_string(FatouClass c) {
  switch (c) {
    case FatouClass::SimplyConnected: return "SimplyConnected";
    case FatouClass::DoublyConnected: return "DoublyConnected";
    case FatouClass::Other: return "Other";
  }
  return "?";
}

struct FatouComponent {
  int id = 0;  // label in the padded background labelling
  FatouClass kind = FatouClass::SimplyConnected;
  int holes = 0;
  bool unbounded = false;
  std::size_t pixels = 0;
};

namespace detail {

/// Region adjacency graph of a padded raster: foreground 8-components and
/// background 4-components, linked when 4-adjacent. With this pair of
/// connectivities the graph is a tree, so the number of complementary regions
/// of a node (on the sphere) equals its degree.
struct RegionTree {
  ComponentLabels fg, bg;
  std::vector<std::set<int>> bg_neighbours;  // bg id-1 -> fg ids
  std::vector<std::set<int>> fg_neighbours;  // fg id-1 -> bg ids
  int frame_bg = 0;                          // bg id of the padding frame
};

inline RegionTree region_tree(const RasterSet& r) {
  RegionTree t;
  const RasterSet p = pad_frame(r);
  t.fg = label_components(p);
  t.bg = label_background(p);
  t.bg_neighbours.resize(static_cast<std::size_t>(t.bg.count));
  t.fg_neighbours.resize(static_cast<std::size_t>(t.fg.count));
  const int w = p.width(), h = p.height();
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      const std::size_t i = static_cast<std::size_t>(y) * w + x;
      const int f = t.fg.label[i];
      if (!f) continue;
      auto link = [&](int nx, int ny) {
        if (nx < 0 || ny < 0 || nx >= w || ny >= h) return;
        const int b = t.bg.label[static_cast<std::size_t>(ny) * w + nx];
        if (!b) return;
        t.bg_neighbours[b - 1].insert(f);
        t.fg_neighbours[f - 1].insert(b);
      };
      link(x - 1, y);
      link(x + 1, y);
      link(x, y - 1);
      link(x, y + 1);
    }
  t.frame_bg = t.bg.label[0];
  return t;
}

}  // namespace detail

/// Classifies every complementary region of the (optionally dilated) raster
/// by its number of holes. Outside the window counts as one region attached
/// to the window border, so a region touching the border is Unbounded.
inline std::vector<FatouComponent> classify_fatou_components(const RasterSet& julia,
                                                             int dilation = 1) {
  const RasterSet j = dilate(julia, dilation);
  const auto tree = detail::region_tree(j);
  std::vector<FatouComponent> out;
  for (int b = 1; b <= tree.bg.count; ++b) {
    FatouComponent fc;
    fc.id = b;
    fc.unbounded = b == tree.frame_bg;
    const int degree = static_cast<int>(tree.bg_neighbours[b - 1].size());
    fc.holes = std::max(0, degree - 1);
    fc.kind = fc.holes == 0   ? FatouClass::SimplyConnected
              : fc.holes == 1 ? FatouClass::DoublyConnected
                              : FatouClass::Other;
    // The frame pixels are not part of the window.
    fc.pixels = tree.bg.pixels[b - 1];
    if (fc.unbounded)
      fc.pixels -= static_cast<std::size_t>(2 * (j.width() + j.height()) + 4);
    out.push_back(fc);
  }
  return out;
}

/// Jordan test: the complement of the component, inside the window padded by
/// a one-pixel frame, splits into exactly two 4-connected regions.
inline bool is_jordan_curve(const RasterSet& component) {
  if (component.empty()) return false;
  return label_background(detail::pad_frame(component)).count == 2;
}

// ---- J_min and J_max ------------------------------------------------------

struct ExtremeComponents {
  int jmin = 0, jmax = 0;
  OrderResult order;
};

namespace detail {

/// Component with the largest overlap with `zone`; 0 when none overlaps.
inline int best_overlap(const ComponentLabels& l, const RasterSet& zone) {
  std::vector<std::size_t> hits(static_cast<std::size_t>(l.count) + 1, 0);
  for (std::size_t i = 0; i < zone.size(); ++i)
    if (zone[i] && l.label[i]) ++hits[l.label[i]];
  int best = 0;
  for (int id = 1; id <= l.count; ++id)
    if (hits[id] > 0 && (best == 0 || hits[id] > hits[best])) best = id;
  return best;
}

inline Complex raster_centroid(const RasterSet& r) {
  Complex s{};
  std::size_t n = 0;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (r[i]) {
      s += r.grid().center(i);
      ++n;
    }
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "centroid of an empty raster");
  return s / static_cast<double>(n);
}

}  // namespace detail

/// J_min meets the 2-pixel neighbourhood of the boundary of K-hat; J_max meets
/// that of the boundary of the unbounded complementary region. Both are
/// cross-checked against the extremes of the surrounding order, anchored at
/// the K-hat centroid.
inline ExtremeComponents find_jmin_jmax(const ComponentLabels& l, const RasterSet& julia,
                                        const RasterSet& khat) {
  if (khat.empty()) throw Error(ErrorKind::InvalidArgument, "K-hat raster is empty");
  if (!(khat.grid() == l.grid)) throw Error(ErrorKind::InvalidArgument, "K-hat grid mismatch");
  if (l.count == 0) throw Error(ErrorKind::Domain, "Julia raster has no components");
  ExtremeComponents res;
  res.jmin = detail::best_overlap(l, dilate(boundary4(khat), 2));
  if (!res.jmin) throw Error(ErrorKind::Domain, "no component meets the boundary of K-hat");

  // Boundary of the unbounded complementary region.
  const auto bg = label_background(detail::pad_frame(julia));
  const int frame = bg.label[0];
  RasterSet ubound(julia.grid());
  const int pw = julia.width() + 2;
  for (int y = 0; y < julia.height(); ++y)
    for (int x = 0; x < julia.width(); ++x) {
      if (bg.label[static_cast<std::size_t>(y + 1) * pw + (x + 1)] != frame) continue;
      if (julia.get(x - 1, y) || julia.get(x + 1, y) || julia.get(x, y - 1) ||
          julia.get(x, y + 1))
        ubound.set(x, y);
    }
  res.jmax = detail::best_overlap(l, dilate(ubound, 2));
  if (!res.jmax)
    throw Error(ErrorKind::Domain, "no component meets the boundary of the unbounded region");

  res.order = order_components(l, detail::raster_centroid(khat));
  if (!res.order.total)
    throw Error(ErrorKind::Domain, "components are not totally ordered; cannot cross-check");
  if (res.order.order.front() != res.jmin || res.order.order.back() != res.jmax)
    throw Error(ErrorKind::Domain, "J_min/J_max disagree with the extremes of the surrounding order");
  return res;
}

// ---- g* -------------------------------------------------------------------

/// Component of the labelled J raster that holds the pullback of component
/// `id` under generator `g_index`.
inline int g_star(const GeneratorSet& gens, std::size_t g_index, int id,
                  const ComponentLabels& l) {
  if (g_index >= gens.size())
    throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  const RasterSet pre = preimage_raster(gens[g_index], l.component(id), l.grid);
  if (pre.empty()) throw Error(ErrorKind::Domain, "preimage of the component misses the window");
  const RasterSet zone = dilate(pre, 1);
  std::set<int> hit;
  for (std::size_t i = 0; i < zone.size(); ++i)
    if (zone[i] && l.label[i]) hit.insert(l.label[i]);
  if (hit.empty()) throw Error(ErrorKind::Domain, "preimage meets no component");
  if (hit.size() > 1)
    throw Error(ErrorKind::Domain, "preimage spans " + std::to_string(hit.size()) + " components",
                static_cast<double>(hit.size()));
  return *hit.begin();
}

// ---- containment ----------------------------------------------------------

struct ComponentContainment {
  int id = 0;
  std::vector<std::size_t> generators;  // whose Julia raster the component holds
  bool star = false;
  bool star_lambda = false;
};

struct ContainmentReport {
  std::vector<ComponentContainment> components;
  /// Components of the union of generator Julia rasters, grouped across 1-px gaps.
  ComponentLabels generator_union;
  std::optional<int> m_prime, m_double_prime;
  /// J-raster components containing M' and M''.
  std::optional<int> m_prime_host, m_double_prime_host;
  std::optional<bool> jmin_contains_m_prime, jmax_contains_m_double_prime;
  std::vector<std::size_t> b_min;  // generators held by J_min
};

/// Only generator Julia sets are tested, so `star` is the lower bound given
/// by `star_lambda`.
inline ContainmentReport containment_report(const ComponentLabels& l,
                                            const std::vector<RasterSet>& gen_julia,
                                            std::optional<ExtremeComponents> extremes = {}) {
  ContainmentReport rep;
  for (const auto& g : gen_julia)
    if (!(g.grid() == l.grid)) throw Error(ErrorKind::InvalidArgument, "raster grid mismatch");
  // Label of the component that holds each generator raster after 2-px slack.
  std::vector<int> host(gen_julia.size(), 0);
  for (int id = 1; id <= l.count; ++id) {
    ComponentContainment cc;
    cc.id = id;
    rep.components.push_back(cc);
  }
  if (l.count > 0) {
    for (std::size_t k = 0; k < gen_julia.size(); ++k) {
      if (gen_julia[k].empty()) continue;
      std::set<int> cands;
      const RasterSet near = dilate(gen_julia[k], 2);
      for (std::size_t i = 0; i < near.size(); ++i)
        if (near[i] && l.label[i]) cands.insert(l.label[i]);
      for (int id : cands) {
        const RasterSet zone = dilate(l.component(id), 2);
        if (gen_julia[k].subset_of(zone)) {
          host[k] = id;
          rep.components[id - 1].generators.push_back(k);
          break;
        }
      }
    }
  }
  for (auto& c : rep.components) c.star = c.star_lambda = !c.generators.empty();

  RasterSet uni;
  bool any = false;
  for (const auto& g : gen_julia) {
    if (!any) {
      uni = g;
      any = true;
    } else {
      uni |= g;
    }
  }
  if (any && !uni.empty()) {
    // Escape-time rasters of connected Julia sets break at pinch points, so
    // pieces closer than one pixel are grouped.
    rep.generator_union = label_components(dilate(uni, 1));
    const auto& u = rep.generator_union;
    std::vector<RasterSet> parts;
    for (int id = 1; id <= u.count; ++id) {
      parts.push_back(u.component(id));
      parts.back() &= uni;
    }
    auto extreme = [&](OrderRelation want) -> std::optional<int> {
      for (int a = 1; a <= u.count; ++a) {
        bool ok = true;
        for (int b = 1; b <= u.count && ok; ++b)
          if (a != b) ok = surrounding_compare(parts[a - 1], parts[b - 1]).relation == want;
        if (ok) return a;
      }
      return std::nullopt;
    };
    rep.m_prime = extreme(OrderRelation::Less);
    rep.m_double_prime = extreme(OrderRelation::Greater);
    auto host_of = [&](int uid) -> std::optional<int> {
      const RasterSet& part = parts[uid - 1];
      std::set<int> cands;
      for (std::size_t i = 0; i < part.size(); ++i)
        if (part[i] && l.label[i]) cands.insert(l.label[i]);
      const RasterSet near = dilate(part, 2);
      for (std::size_t i = 0; i < near.size(); ++i)
        if (near[i] && l.label[i]) cands.insert(l.label[i]);
      for (int id : cands)
        if (part.subset_of(dilate(l.component(id), 2))) return id;
      return std::nullopt;
    };
    if (rep.m_prime) rep.m_prime_host = host_of(*rep.m_prime);
    if (rep.m_double_prime) rep.m_double_prime_host = host_of(*rep.m_double_prime);
  }
  if (extremes) {
    rep.jmin_contains_m_prime = rep.m_prime_host && *rep.m_prime_host == extremes->jmin;
    rep.jmax_contains_m_double_prime =
        rep.m_double_prime_host && *rep.m_double_prime_host == extremes->jmax;
    rep.b_min = rep.components[extremes->jmin - 1].generators;
  }
  return rep;
}

}  // namespace semijulia

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <unordered_set>
#include <vector>

#include "semijulia/generator.hpp"
#include "semijulia/pullback.hpp"

namespace semijulia {

struct EscapeWitness {
  Word word;              // may be empty when a critical value itself escapes
  Complex critical_value;
  Complex escaped_point;  // image of critical_value under word, |.| > R
};

/// Finite sample of the planar postcritical set.
struct PostcriticalSample {
  std::vector<Complex> points;
  int depth = 0;
  std::optional<EscapeWitness> escaped_witness;
};

enum class PostcriticalVerdict { Bounded, Escapes };

struct PostcriticalResult {
  PostcriticalVerdict verdict;
  PostcriticalSample sample;
  bool bounded() const { return verdict == PostcriticalVerdict::Bounded; }
};

/// Breadth-first forward orbits of all finite critical values under words of
/// length <= depth, deduplicated on a 1e-9 lattice. `Bounded` only means no
/// orbit point left the escape disk up to `depth`.
inline PostcriticalResult postcritical_bounded_check(const GeneratorSet& gens, int depth,
                                                     std::size_t budget = 10'000'000) {
  if (depth < 1) throw Error(ErrorKind::InvalidArgument, "depth must be >= 1");
  const double R = gens.escape_radius();
  struct Node {
    Complex z;
    std::int64_t parent;
    std::uint32_t gen;
    std::uint32_t cv;
  };
  std::vector<Complex> cvs;
  for (const auto& g : gens)
    for (auto v : g.critical_values()) cvs.push_back(v);
  cvs = collapse_points(std::move(cvs), 1e-12);

  std::vector<Node> nodes;
  struct KeyHash {
    std::size_t operator()(const std::pair<std::int64_t, std::int64_t>& k) const {
      return std::hash<std::int64_t>()(k.first * 0x9E3779B97F4A7C15LL ^ k.second);
    }
  };
  std::unordered_set<std::pair<std::int64_t, std::int64_t>, KeyHash> seen;
  auto key = [](Complex z) {
    return std::make_pair(static_cast<std::int64_t>(std::llround(z.real() * 1e9)),
                          static_cast<std::int64_t>(std::llround(z.imag() * 1e9)));
  };
  auto word_of = [&](std::int64_t idx) {
    Word w;
    for (; idx >= 0 && nodes[idx].parent != -2; idx = nodes[idx].parent)
      w.indices.push_back(nodes[idx].gen);
    std::reverse(w.indices.begin(), w.indices.end());
    return w;
  };
  auto finish = [&](PostcriticalVerdict v, std::optional<EscapeWitness> wit, int d) {
    PostcriticalResult res{v, {}};
    res.sample.depth = d;
    res.sample.escaped_witness = std::move(wit);
    res.sample.points.reserve(nodes.size());
    for (const auto& n : nodes) res.sample.points.push_back(n.z);
    return res;
  };

  std::vector<std::int64_t> frontier;
  for (std::uint32_t i = 0; i < cvs.size(); ++i) {
    if (!(std::abs(cvs[i]) <= R))
      return finish(PostcriticalVerdict::Escapes, EscapeWitness{{}, cvs[i], cvs[i]}, 0);
    if (seen.insert(key(cvs[i])).second) {
      nodes.push_back({cvs[i], -2, 0, i});
      frontier.push_back(static_cast<std::int64_t>(nodes.size() - 1));
    }
  }
  for (int level = 1; level <= depth; ++level) {
    std::vector<std::int64_t> next;
    for (auto idx : frontier) {
      for (std::uint32_t g = 0; g < gens.size(); ++g) {
        const Complex z = gens[g](nodes[idx].z);
        if (!(std::abs(z) <= R)) {
          Word w = word_of(idx);
          w.indices.push_back(g);
          return finish(PostcriticalVerdict::Escapes,
                        EscapeWitness{std::move(w), cvs[nodes[idx].cv], z}, level);
        }
        if (seen.insert(key(z)).second) {
          nodes.push_back({z, idx, g, nodes[idx].cv});
          next.push_back(static_cast<std::int64_t>(nodes.size() - 1));
          if (nodes.size() > budget)
            throw Error(ErrorKind::Resource,
                        "postcritical sample exceeded budget of " + std::to_string(budget) +
                            " points",
                        static_cast<double>(nodes.size()));
        }
      }
    }
    frontier = std::move(next);
    if (frontier.empty()) return finish(PostcriticalVerdict::Bounded, std::nullopt, depth);
  }
  return finish(PostcriticalVerdict::Bounded, std::nullopt, depth);
}

enum class KhatBound { Outer, Inner };

/// Default test for K-hat: the image of the pixel centre must land within
/// half a pixel of K_n.
inline PullbackOptions khat_pullback_options() {
  PullbackOptions o;
  o.derivative_reach = false;
  return o;
}

/// Greatest-fixed-point iteration for the smallest filled-in Julia set,
/// starting from the closed disk of the smallest generator doubling radius.
/// `Outer`: a pixel survives when, for every generator, its probe reaches K_n.
/// `Inner`: when every probe disk lies inside K_n; with derivative reach this
/// gives an under-approximation. Stops early once two generations coincide.
inline RasterSet smallest_filled_julia(const GeneratorSet& gens, const GridSpec& grid, int iters,
                                       PullbackOptions opt = khat_pullback_options(),
                                       KhatBound bound = KhatBound::Outer) {
  if (iters < 1) throw Error(ErrorKind::InvalidArgument, "iters must be >= 1");
  const double r0 = gens.min_generator_radius();
  if (!grid.covers_disk(0.0, r0))
    throw Error(ErrorKind::Domain,
                "grid does not cover the disk |z| <= " + std::to_string(r0) +
                    " that contains the smallest filled-in Julia set",
                r0);
  RasterSet k = disk_raster(grid, 0.0, r0);
  PullbackKernel kernel(gens.generators(), grid, k, grid, opt);
  for (int n = 0; n < iters; ++n) {
    RasterSet next(grid);
    if (bound == KhatBound::Outer) {
      next = kernel.apply(DistanceField(k), Quantifier::All, &k);
    } else {
      RasterSet all(grid);
      std::fill(all.bits().begin(), all.bits().end(), 1);
      next = kernel.apply_inside(DistanceField(all - k), grid.width, grid.height, &k);
    }
    if (next == k) break;
    k = std::move(next);
  }
  return k;
}

}  // namespace semijulia

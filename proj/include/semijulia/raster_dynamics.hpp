#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "semijulia/generator.hpp"
#include "semijulia/pullback.hpp"
#include "semijulia/semigroup.hpp"

namespace semijulia {

/// First N symbols of a generator sequence x = (x_1, x_2, ...).
struct TrajectoryPrefix {
  std::vector<std::size_t> indices;
};

/// splitmix64; small, seedable and identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n).
  std::size_t below(std::size_t n) {
    return static_cast<std::size_t>((static_cast<unsigned __int128>(next()) * n) >> 64);
  }

 private:
  std::uint64_t state_;
};

// ---- survivor iteration ---------------------------------------------------

/// Default seed: disk of the escape radius, clipped to the window, minus the
/// `erosion`-pixel erosion of the K-hat raster. K-hat is skipped (seed = disk)
/// when the window does not cover the disk holding it.
inline RasterSet default_survivor_seed(const GeneratorSet& gens, const GridSpec& grid,
                                       int erosion = 1, int khat_iters = 60) {
  RasterSet seed = disk_raster(grid, 0.0, gens.escape_radius());
  if (grid.covers_disk(0.0, gens.min_generator_radius()))
    seed -= erode(smallest_filled_julia(gens, grid, khat_iters), erosion);
  return seed;
}

/// A_{n+1} = {z in A_0 : some generator maps the pixel of z into A_n}. The
/// sequence is non-increasing, so only members of A_n are retested, and the
/// loop stops at a fixed point.
inline RasterSet julia_survivor(const GeneratorSet& gens, const GridSpec& grid,
                                const RasterSet& seed_region, int iters,
                                PullbackOptions opt = {}) {
  if (!(seed_region.grid() == grid))
    throw Error(ErrorKind::InvalidArgument, "seed region is not on the requested grid");
  if (seed_region.empty()) throw Error(ErrorKind::InvalidArgument, "seed region is empty");
  if (iters < 0) throw Error(ErrorKind::InvalidArgument, "iters must be >= 0");
  if (iters == 0) return seed_region;
  PullbackKernel kernel(gens.generators(), grid, seed_region, grid, opt);
  RasterSet a = seed_region;
  for (int n = 0; n < iters; ++n) {
    RasterSet next = kernel.apply(DistanceField(a), Quantifier::Any, &a);
    if (next == a) break;
    a = std::move(next);
  }
  return a;
}

// ---- chaos game -----------------------------------------------------------

/// Preimages of w under one application of `p`, in a fixed order.
inline std::vector<Complex> chaos_preimages(const Polynomial& p, Complex w) {
  return preimages(p, w);
}

/// Fixed point of largest modulus of the first generator's base polynomial,
/// required to be repelling. A repelling fixed point of the base is also one
/// of every iterate of it.
inline Complex default_chaos_start(const GeneratorSet& gens) {
  const Polynomial& p = gens[0].base;
  const auto fixed = polynomial_roots(p + Polynomial{Complex{0.0}, Complex{-1.0}}, 1e-8,
                                      std::max(1.0, p.max_coeff_modulus()));
  std::optional<Complex> best;
  for (auto z : fixed)
    if (!best || std::abs(z) > std::abs(*best)) best = z;
  if (!best || !(std::abs(p.eval_with_derivative(*best).second) > 1.0))
    throw Error(ErrorKind::Domain,
                "no repelling fixed point of largest modulus for generator '" + gens[0].name +
                    "'; supply a start point on the Julia set");
  return *best;
}

/// Random backward orbit: each step picks a generator uniformly and then a
/// preimage uniformly (one base preimage per nested level of an iterate, which
/// is uniform over all preimages of the iterate). The first 100 steps are
/// discarded.
inline RasterSet julia_chaos(const GeneratorSet& gens, std::optional<Complex> z0,
                             std::int64_t samples, const GridSpec& grid, std::uint64_t seed) {
  if (samples < 0) throw Error(ErrorKind::InvalidArgument, "samples must be >= 0");
  constexpr int kBurnIn = 100;
  Complex z = z0 ? *z0 : default_chaos_start(gens);
  SplitMix64 rng(seed);
  RasterSet out(grid);
  for (std::int64_t step = 0; step < samples; ++step) {
    const Generator& g = gens[rng.below(gens.size())];
    for (int level = 0; level < g.iterate; ++level) {
      const auto pre = chaos_preimages(g.base, z);
      z = pre[rng.below(pre.size())];
    }
    if (step < kBurnIn) continue;
    const auto px = grid.pixel_of(z);
    if (px >= 0) out.set(static_cast<std::size_t>(px));
  }
  return out;
}

// ---- union of single-word Julia sets --------------------------------------

struct WordUnionOptions {
  std::size_t budget = 10'000;
  /// Stop an orbit early once it enters the eroded K-hat raster, whose points
  /// have bounded orbits under every word.
  bool use_trap = true;
  int trap_erosion = 2;
};

/// Filled Julia set of the word map by escape time; `trap` may be null.
inline RasterSet word_filled_julia(const GeneratorSet& gens, const Word& w, const GridSpec& grid,
                                   int iters, const RasterSet* trap = nullptr) {
  gens.validate(w);
  const double R = gens.escape_radius();
  RasterSet out(grid);
  auto& bits = out.bits();
  parallel_rows(grid.height, [&](int row) {
    for (int col = 0; col < grid.width; ++col) {
      Complex z = grid.center(col, row);
      bool bounded = std::abs(z) <= R;
      auto trapped = [&] {
        if (!trap) return false;
        const auto px = grid.pixel_of(z);
        return px >= 0 && (*trap)[static_cast<std::size_t>(px)];
      };
      bool done = !bounded || trapped();
      for (int k = 0; k < iters && !done; ++k) {
        for (auto i : w.indices) {
          z = gens[i](z);
          if (!(std::abs(z) <= R)) {
            bounded = false;
            done = true;
            break;
          }
          if (trapped()) {
            done = true;
            break;
          }
        }
      }
      if (bounded) bits[static_cast<std::size_t>(row) * grid.width + col] = 1;
    }
  });
  return out;
}

/// Union over all words of length 1..max_word_len of the boundaries of their
/// filled Julia sets.
inline RasterSet julia_word_union(const GeneratorSet& gens, int max_word_len,
                                  const GridSpec& grid, int iters = 200,
                                  WordUnionOptions opt = {}) {
  if (max_word_len < 1) throw Error(ErrorKind::InvalidArgument, "max_word_len must be >= 1");
  if (iters < 1) throw Error(ErrorKind::InvalidArgument, "iters must be >= 1");
  const std::size_t m = gens.size();
  double total = 0.0, level = 1.0;
  for (int l = 1; l <= max_word_len; ++l) total += (level *= static_cast<double>(m));
  if (total > static_cast<double>(opt.budget))
    throw Error(ErrorKind::Resource,
                "word union needs " + std::to_string(static_cast<long long>(total)) +
                    " words, above the budget of " + std::to_string(opt.budget),
                total);
  std::optional<RasterSet> trap;
  if (opt.use_trap && grid.covers_disk(0.0, gens.min_generator_radius()))
    {
    PullbackOptions inner;  // derivative reach: the trap must sit inside K-hat
    trap = erode(smallest_filled_julia(gens, grid, 60, inner, KhatBound::Inner), opt.trap_erosion);
  }

  RasterSet out(grid);
  for (int l = 1; l <= max_word_len; ++l) {
    std::vector<std::size_t> idx(static_cast<std::size_t>(l), 0);
    while (true) {
      out |= boundary4(word_filled_julia(gens, Word{idx}, grid, iters, trap ? &*trap : nullptr));
      int pos = l - 1;
      while (pos >= 0 && ++idx[pos] == m) idx[pos--] = 0;
      if (pos < 0) break;
    }
  }
  return out;
}

/// J(h) for one generator: the 4-boundary of its escape-time filled set.
/// K(f^m) = K(f), so the base map is iterated instead of the iterate.
inline RasterSet generator_julia(const GeneratorSet& gens, std::size_t index, const GridSpec& grid,
                                 int iters = 60) {
  if (index >= gens.size()) throw Error(ErrorKind::InvalidArgument, "generator index out of range");
  const GeneratorSet single({Generator{gens[index].name, gens[index].base, 1}});
  return boundary4(word_filled_julia(single, Word{{0}}, grid, iters));
}

// ---- fiberwise filled set -------------------------------------------------

/// Pixels whose partial compositions along the prefix all stay in the escape
/// disk.
inline RasterSet fiberwise_filled(const GeneratorSet& gens, const TrajectoryPrefix& x,
                                  const GridSpec& grid) {
  if (x.indices.empty()) throw Error(ErrorKind::InvalidArgument, "trajectory prefix is empty");
  for (auto i : x.indices)
    if (i >= gens.size())
      throw Error(ErrorKind::InvalidArgument,
                  "trajectory index " + std::to_string(i) + " out of range");
  const double R = gens.escape_radius();
  RasterSet out(grid);
  auto& bits = out.bits();
  parallel_rows(grid.height, [&](int row) {
    for (int col = 0; col < grid.width; ++col) {
      Complex z = grid.center(col, row);
      bool bounded = std::abs(z) <= R;
      for (std::size_t k = 0; k < x.indices.size() && bounded; ++k) {
        z = gens[x.indices[k]](z);
        bounded = std::abs(z) <= R;
      }
      if (bounded) bits[static_cast<std::size_t>(row) * grid.width + col] = 1;
    }
  });
  return out;
}

// ---- preimages ------------------------------------------------------------

/// Pixels of `out_grid` whose cell h maps to within one pixel of `target`.
/// The cell image is bounded by derivative reach, so strongly expanding maps
/// leave no gaps between sampled centres.
inline RasterSet preimage_raster(const Generator& h, const RasterSet& target,
                                 const GridSpec& out_grid) {
  PullbackOptions opt;
  opt.slack_px = 1.0;
  RasterSet all(out_grid);
  std::fill(all.bits().begin(), all.bits().end(), 1);
  PullbackKernel kernel({h}, out_grid, all, target.grid(), opt);
  return kernel.apply(DistanceField(target), Quantifier::Any);
}

inline RasterSet preimage_raster(const Polynomial& p, const RasterSet& target,
                                 const GridSpec& out_grid) {
  return preimage_raster(Generator{"p", p, 1}, target, out_grid);
}

}  // namespace semijulia

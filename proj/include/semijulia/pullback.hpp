#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "semijulia/generator.hpp"
#include "semijulia/raster_ops.hpp"

namespace semijulia {

enum class Quantifier { Any, All };

struct PullbackOptions {
  /// Extra reach (target pixels) added to the image-disk radius.
  double slack_px = 0.5;
  /// Subdivide a pixel when the second-order Taylor term exceeds this
  /// fraction of the first-order term.
  double nonlinearity = 0.25;
  int max_subdivision = 5;
  /// When false, only the pixel centre is mapped and the reach is `slack_px`.
  bool derivative_reach = true;
};

/// Pixel-to-set pullback test shared by every backward iteration.
///
/// For a domain pixel with centre c and half-diagonal s, the image of the pixel
/// under h is approximated by the disk D(h(c), |h'(c)| s). The pixel passes for
/// h when that disk comes within `slack_px` of a member of the target raster,
/// measured on the target's distance field. Pixels on which h is strongly
/// nonlinear are split into sub-cells, each tested with its own disk.
///
/// Probes depend only on the generators and the grids, so they are computed
/// once and replayed against every generation of the target raster.
class PullbackKernel {
 public:
  PullbackKernel(const std::vector<Generator>& gens, const GridSpec& domain,
                 const RasterSet& candidates, const GridSpec& target, PullbackOptions opt = {})
      : domain_(domain), ngens_(gens.size()) {
    if (!(candidates.grid() == domain))
      throw Error(ErrorKind::InvalidArgument, "candidate raster is not on the domain grid");
    for (std::size_t i = 0; i < candidates.size(); ++i)
      if (candidates[i]) pixels_.push_back(static_cast<std::uint32_t>(i));
    // Build per row band so the sweep can run in parallel, then concatenate.
    const std::size_t n = pixels_.size();
    const int bands = std::max(1, std::min<int>(worker_count() * 4, static_cast<int>(n / 4096 + 1)));
    std::vector<std::vector<Probe>> band_probes(static_cast<std::size_t>(bands));
    std::vector<std::vector<std::uint32_t>> band_counts(static_cast<std::size_t>(bands));
    parallel_rows(bands, [&](int b) {
      const std::size_t lo = n * b / bands, hi = n * (b + 1) / bands;
      auto& out = band_probes[b];
      auto& counts = band_counts[b];
      for (std::size_t k = lo; k < hi; ++k) {
        const std::size_t before = out.size();
        const Complex c = domain.center(pixels_[k]);
        for (std::size_t g = 0; g < gens.size(); ++g)
          emit(gens[g], static_cast<std::uint16_t>(g), c, 0.5 * domain.delta(), 0, target, opt,
               out);
        counts.push_back(static_cast<std::uint32_t>(out.size() - before));
      }
    });
    offsets_.reserve(n + 1);
    offsets_.push_back(0);
    for (int b = 0; b < bands; ++b) {
      for (auto c : band_counts[b]) offsets_.push_back(offsets_.back() + c);
      probes_.insert(probes_.end(), band_probes[b].begin(), band_probes[b].end());
    }
  }

  /// Candidate pixels (optionally restricted to `active`) passing the test
  /// against `target_field` under the given quantifier over generators.
  RasterSet apply(const DistanceField& target_field, Quantifier q,
                  const RasterSet* active = nullptr) const {
    RasterSet out(domain_);
    auto& bits = out.bits();
    const std::size_t n = pixels_.size();
    const int bands = std::max(1, std::min<int>(worker_count() * 4, static_cast<int>(n / 4096 + 1)));
    parallel_rows(bands, [&](int b) {
      const std::size_t lo = n * b / bands, hi = n * (b + 1) / bands;
      std::vector<std::uint8_t> hit(ngens_);
      for (std::size_t k = lo; k < hi; ++k) {
        const std::uint32_t px = pixels_[k];
        if (active && !(*active)[px]) continue;
        bool pass = false;
        if (q == Quantifier::Any) {
          for (auto i = offsets_[k]; i < offsets_[k + 1] && !pass; ++i)
            pass = passes(probes_[i], target_field);
        } else {
          std::fill(hit.begin(), hit.end(), 0);
          for (auto i = offsets_[k]; i < offsets_[k + 1]; ++i)
            if (!hit[probes_[i].gen] && passes(probes_[i], target_field)) hit[probes_[i].gen] = 1;
          pass = std::all_of(hit.begin(), hit.end(), [](std::uint8_t h) { return h != 0; });
        }
        if (pass) bits[px] = 1;
      }
    });
    return out;
  }

  /// Candidates whose whole image cell, for every generator, stays inside the
  /// window and at least `reach` away from the complement of the target;
  /// `complement_field` is the distance field of that complement.
  RasterSet apply_inside(const DistanceField& complement_field, int target_width,
                         int target_height, const RasterSet* active = nullptr) const {
    RasterSet out(domain_);
    auto& bits = out.bits();
    const std::size_t n = pixels_.size();
    const int bands = std::max(1, std::min<int>(worker_count() * 4, static_cast<int>(n / 4096 + 1)));
    parallel_rows(bands, [&](int b) {
      const std::size_t lo = n * b / bands, hi = n * (b + 1) / bands;
      std::vector<std::uint8_t> seen(ngens_);
      for (std::size_t k = lo; k < hi; ++k) {
        const std::uint32_t px = pixels_[k];
        if (active && !(*active)[px]) continue;
        std::fill(seen.begin(), seen.end(), 0);
        bool pass = true;
        for (auto i = offsets_[k]; i < offsets_[k + 1] && pass; ++i) {
          const Probe& p = probes_[i];
          seen[p.gen] = 1;
          const double lim_x = target_width - 0.5 - p.reach, lim_y = target_height - 0.5 - p.reach;
          pass = p.fx >= p.reach - 0.5 && p.fy >= p.reach - 0.5 && p.fx <= lim_x &&
                 p.fy <= lim_y && complement_field.sample(p.fx, p.fy) > p.reach;
        }
        if (pass && std::all_of(seen.begin(), seen.end(), [](std::uint8_t h) { return h != 0; }))
          bits[px] = 1;
      }
    });
    return out;
  }

  std::size_t probe_count() const { return probes_.size(); }

 private:
  struct Probe {
    float fx, fy, reach;
    std::uint16_t gen;
  };

  static bool passes(const Probe& p, const DistanceField& df) {
    return df.sample(p.fx, p.fy) <= p.reach;
  }

  static void emit(const Generator& h, std::uint16_t gen, Complex c, double half, int depth,
                   const GridSpec& target, const PullbackOptions& opt, std::vector<Probe>& out) {
    if (!opt.derivative_reach) {
      const Complex w = h(c);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w) > 1e12) return;
      const auto [fx, fy] = target.to_pixel(w);
      if (std::abs(fx) > 1e7 || std::abs(fy) > 1e7) return;
      out.push_back({static_cast<float>(fx), static_cast<float>(fy),
                     static_cast<float>(opt.slack_px), gen});
      return;
    }
    const auto [w, d1, d2] = h.eval_with_derivatives2(c);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag()) || std::abs(w) > 1e12) return;
    const double s = half * std::sqrt(2.0);
    const double first = std::abs(d1) * s;
    const double second = 0.5 * std::abs(d2) * s * s;
    if (depth < opt.max_subdivision &&
        second > opt.nonlinearity * std::max(first, target.delta())) {
      const double q = 0.5 * half;
      for (double dx : {-q, q})
        for (double dy : {-q, q}) emit(h, gen, c + Complex(dx, dy), q, depth + 1, target, opt, out);
      return;
    }
    const auto [fx, fy] = target.to_pixel(w);
    const double limit = 1e7;
    if (std::abs(fx) > limit || std::abs(fy) > limit) return;
    out.push_back({static_cast<float>(fx), static_cast<float>(fy),
                   static_cast<float>(opt.slack_px + (first + second) / target.delta()), gen});
  }

  GridSpec domain_;
  std::size_t ngens_;
  std::vector<std::uint32_t> pixels_;
  std::vector<std::uint32_t> offsets_;
  std::vector<Probe> probes_;
};

}  // namespace semijulia

#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <thread>
#include <vector>

#include "semijulia/grid.hpp"

namespace semijulia {

// ---- threading ------------------------------------------------------------

inline std::atomic<int>& thread_limit() {
  static std::atomic<int> limit{0};
  return limit;
}

/// Caps worker threads for pixel sweeps; 0 means hardware concurrency.
inline void set_thread_limit(int n) { thread_limit() = std::max(0, n); }

inline int worker_count() {
  const int hw = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const int lim = thread_limit();
  return lim > 0 ? std::min(lim, hw) : hw;
}

/// Runs fn(row) for every row; rows are split into contiguous bands, one per
/// worker. fn must only write to state owned by its row.
template <class Fn>
void parallel_rows(int height, Fn&& fn) {
  const int workers = std::min(worker_count(), height);
  if (workers <= 1) {
    for (int r = 0; r < height; ++r) fn(r);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    const int lo = height * w / workers, hi = height * (w + 1) / workers;
    pool.emplace_back([lo, hi, &fn] {
      for (int r = lo; r < hi; ++r) fn(r);
    });
  }
}

// ---- distance transforms --------------------------------------------------

namespace detail {

/// Stand-in for +inf inside the parabola envelope.
inline constexpr double kFar = 1e20;

/// 1-D squared distance transform of sampled function f (Felzenszwalb &
/// Huttenlocher lower envelope of parabolas).
inline void edt_1d(const double* f, double* d, int n, std::vector<int>& v,
                   std::vector<double>& z) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  int k = 0;
  v[0] = 0;
  z[0] = -kInf;
  z[1] = kInf;
  for (int q = 1; q < n; ++q) {
    double s = 0.0;
    while (true) {
      const int p = v[k];
      s = ((f[q] + double(q) * q) - (f[p] + double(p) * p)) / (2.0 * (q - p));
      if (s <= z[k]) {
        --k;
        continue;
      }
      break;
    }
    ++k;
    v[k] = q;
    z[k] = s;
    z[k + 1] = kInf;
  }
  k = 0;
  for (int q = 0; q < n; ++q) {
    while (z[k + 1] < q) ++k;
    const double dq = q - v[k];
    d[q] = dq * dq + f[v[k]];
  }
}

}  // namespace detail

/// Squared Euclidean distance (in pixels) from every pixel centre to the
/// nearest member centre; +inf everywhere when the raster is empty. Two
/// separable passes: columns, then rows.
inline std::vector<double> squared_distance_transform(const RasterSet& r) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  const int w = r.width(), h = r.height();
  std::vector<double> d(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) d[i] = r[i] ? 0.0 : detail::kFar;
  const int n = std::max(w, h);
  std::vector<double> f(n), out(n);
  std::vector<int> v(n);
  std::vector<double> z(n + 1);
  for (int x = 0; x < w; ++x) {
    for (int y = 0; y < h; ++y) f[y] = d[static_cast<std::size_t>(y) * w + x];
    detail::edt_1d(f.data(), out.data(), h, v, z);
    for (int y = 0; y < h; ++y) d[static_cast<std::size_t>(y) * w + x] = out[y];
  }
  for (int y = 0; y < h; ++y) {
    double* row = d.data() + static_cast<std::size_t>(y) * w;
    std::copy(row, row + w, f.begin());
    detail::edt_1d(f.data(), row, w, v, z);
  }
  for (auto& x : d)
    if (x >= 0.5 * detail::kFar) x = kInf;
  return d;
}

/// Euclidean distance field (pixels) with bilinear sampling at continuous
/// pixel coordinates. Points outside the window pick up their distance to the
/// window (1-Lipschitz extension).
class DistanceField {
 public:
  explicit DistanceField(const RasterSet& r) : w_(r.width()), h_(r.height()) {
    auto sq = squared_distance_transform(r);
    d_.resize(sq.size());
    for (std::size_t i = 0; i < sq.size(); ++i) d_[i] = static_cast<float>(std::sqrt(sq[i]));
  }

  float at(int col, int row) const { return d_[static_cast<std::size_t>(row) * w_ + col]; }

  double sample(double fx, double fy) const {
    const double cx = std::clamp(fx, 0.0, double(w_ - 1));
    const double cy = std::clamp(fy, 0.0, double(h_ - 1));
    const double outside = std::hypot(fx - cx, fy - cy);
    const int x0 = std::min(static_cast<int>(cx), w_ - 2 < 0 ? 0 : w_ - 2);
    const int y0 = std::min(static_cast<int>(cy), h_ - 2 < 0 ? 0 : h_ - 2);
    const int x1 = std::min(x0 + 1, w_ - 1), y1 = std::min(y0 + 1, h_ - 1);
    const double tx = cx - x0, ty = cy - y0;
    const double a = at(x0, y0), b = at(x1, y0), c = at(x0, y1), e = at(x1, y1);
    if (!std::isfinite(a + b + c + e)) {
      // Empty raster (all inf) or mixed: fall back to the nearest sample.
      return std::min({a, b, c, e}) + outside + 1.0;
    }
    const double top = a + (b - a) * tx, bottom = c + (e - c) * tx;
    return top + (bottom - top) * ty + outside;
  }

 private:
  int w_, h_;
  std::vector<float> d_;
};

// ---- morphology -----------------------------------------------------------

/// Chebyshev (square) dilation by `radius` pixels.
inline RasterSet dilate(const RasterSet& r, int radius) {
  if (radius <= 0) return r;
  const int w = r.width(), h = r.height();
  RasterSet tmp(r.grid()), out(r.grid());
  for (int y = 0; y < h; ++y) {
    int last = -1000000000;
    std::vector<int> next(static_cast<std::size_t>(w), 1000000000);
    int nxt = 1000000000;
    for (int x = w - 1; x >= 0; --x) {
      if (r.at(x, y)) nxt = x;
      next[x] = nxt;
    }
    for (int x = 0; x < w; ++x) {
      if (r.at(x, y)) last = x;
      if (x - last <= radius || next[x] - x <= radius) tmp.set(x, y);
    }
  }
  for (int x = 0; x < w; ++x) {
    int last = -1000000000;
    std::vector<int> next(static_cast<std::size_t>(h), 1000000000);
    int nxt = 1000000000;
    for (int y = h - 1; y >= 0; --y) {
      if (tmp.at(x, y)) nxt = y;
      next[y] = nxt;
    }
    for (int y = 0; y < h; ++y) {
      if (tmp.at(x, y)) last = y;
      if (y - last <= radius || next[y] - y <= radius) out.set(x, y);
    }
  }
  return out;
}

/// Chebyshev erosion; pixels outside the window count as members.
inline RasterSet erode(const RasterSet& r, int radius) {
  if (radius <= 0) return r;
  RasterSet inv(r.grid());
  for (std::size_t i = 0; i < r.size(); ++i) inv.set(i, !r[i]);
  RasterSet grown = dilate(inv, radius);
  RasterSet out(r.grid());
  for (std::size_t i = 0; i < r.size(); ++i) out.set(i, !grown[i]);
  return out;
}

/// Members with at least one 4-neighbour non-member. Out-of-window neighbours
/// count as members, so sets cut by the window get no artificial frame.
inline RasterSet boundary4(const RasterSet& r) {
  RasterSet out(r.grid());
  for (int y = 0; y < r.height(); ++y)
    for (int x = 0; x < r.width(); ++x) {
      if (!r.at(x, y)) continue;
      if (!r.get(x - 1, y, true) || !r.get(x + 1, y, true) || !r.get(x, y - 1, true) ||
          !r.get(x, y + 1, true))
        out.set(x, y);
    }
  return out;
}

/// Symmetric Hausdorff distance between the member pixel centres, in pixels.
inline double hausdorff_px(const RasterSet& a, const RasterSet& b) {
  a.check_same(b);
  if (a.empty() || b.empty())
    throw Error(ErrorKind::InvalidArgument, "Hausdorff distance of an empty raster");
  auto da = squared_distance_transform(a);
  auto db = squared_distance_transform(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) worst = std::max(worst, db[i]);
    if (b[i]) worst = std::max(worst, da[i]);
  }
  return std::sqrt(worst);
}

/// Largest distance (pixels) from a member of `a` to the nearest member of `b`.
inline double directed_hausdorff_px(const RasterSet& a, const RasterSet& b) {
  a.check_same(b);
  if (a.empty() || b.empty())
    throw Error(ErrorKind::InvalidArgument, "Hausdorff distance of an empty raster");
  auto db = squared_distance_transform(b);
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) worst = std::max(worst, db[i]);
  return std::sqrt(worst);
}

}  // namespace semijulia

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "semijulia/polynomial.hpp"

namespace semijulia {

/// Square-pixel window onto the complex plane. Row 0 is the top (largest
/// imaginary part).
struct GridSpec {
  double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
  int width = 0, height = 0;

  static GridSpec make(double xmin, double xmax, double ymin, double ymax, int width,
                       int height) {
    GridSpec g{xmin, xmax, ymin, ymax, width, height};
    g.validate();
    return g;
  }

  /// Square window centred at `center` with half-side `half`.
  static GridSpec square(Complex center, double half, int size) {
    return make(center.real() - half, center.real() + half, center.imag() - half,
                center.imag() + half, size, size);
  }

  /// Height follows from the square-pixel constraint.
  static GridSpec from_corners(double xmin, double ymin, double xmax, double ymax, int width) {
    if (!(width > 0) || !(xmax > xmin) || !(ymax > ymin))
      throw Error(ErrorKind::InvalidArgument, "grid needs xmax > xmin, ymax > ymin, width > 0");
    const double delta = (xmax - xmin) / width;
    const double h = (ymax - ymin) / delta;
    const double hr = std::round(h);
    if (std::abs(h - hr) > 1e-6 * std::max(1.0, hr) || hr < 1)
      throw Error(ErrorKind::InvalidArgument,
                  "grid window does not yield an integral height with square pixels");
    return make(xmin, xmax, ymin, ymax, width, static_cast<int>(hr));
  }

  void validate() const {
    if (width <= 0 || height <= 0 || !(xmax > xmin) || !(ymax > ymin))
      throw Error(ErrorKind::InvalidArgument, "degenerate grid");
    const double dx = (xmax - xmin) / width, dy = (ymax - ymin) / height;
    if (std::abs(dx - dy) > 1e-9 * std::max(dx, dy))
      throw Error(ErrorKind::InvalidArgument, "grid pixels are not square");
  }

  double delta() const { return (xmax - xmin) / width; }
  std::size_t size() const { return static_cast<std::size_t>(width) * height; }

  Complex center(int col, int row) const {
    const double d = delta();
    return {xmin + (col + 0.5) * d, ymax - (row + 0.5) * d};
  }
  Complex center(std::size_t idx) const {
    return center(static_cast<int>(idx % width), static_cast<int>(idx / width));
  }

  /// Continuous pixel coordinates: pixel centres sit at integer (col, row).
  std::pair<double, double> to_pixel(Complex z) const {
    const double d = delta();
    return {(z.real() - xmin) / d - 0.5, (ymax - z.imag()) / d - 0.5};
  }

  /// Index of the pixel containing z, or -1 outside the window.
  std::ptrdiff_t pixel_of(Complex z) const {
    const double d = delta();
    const double fx = (z.real() - xmin) / d, fy = (ymax - z.imag()) / d;
    if (!(fx >= 0.0 && fy >= 0.0 && fx < width && fy < height)) return -1;
    return static_cast<std::ptrdiff_t>(fy) * width + static_cast<std::ptrdiff_t>(fx);
  }

  /// True when the closed disk B(c, r) lies inside the window.
  bool covers_disk(Complex c, double r) const {
    return c.real() - r >= xmin && c.real() + r <= xmax && c.imag() - r >= ymin &&
           c.imag() + r <= ymax;
  }

  friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

/// Parses "xmin:ymin:xmax:ymax:width".
inline GridSpec parse_grid(const std::string& text) {
  std::vector<double> v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "malformed grid '" + text + "': bad number '" + item + "'");
    }
  }
  if (v.size() != 5 || v[4] != std::floor(v[4]))
    throw Error(ErrorKind::Parse,
                "malformed grid '" + text + "': expected xmin:ymin:xmax:ymax:width");
  return GridSpec::from_corners(v[0], v[1], v[2], v[3], static_cast<int>(v[4]));
}

inline std::string format_grid(const GridSpec& g) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%.17g:%.17g:%.17g:%.17g:%d", g.xmin, g.ymin, g.xmax, g.ymax,
                g.width);
  return buf;
}

/// One bit (stored as a byte) per pixel, row-major.
class RasterSet {
 public:
  RasterSet() = default;
  explicit RasterSet(GridSpec grid) : grid_(grid), bits_(grid.size(), 0) {}

  const GridSpec& grid() const { return grid_; }
  int width() const { return grid_.width; }
  int height() const { return grid_.height; }
  std::size_t size() const { return bits_.size(); }

  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  bool at(int col, int row) const {
    return bits_[static_cast<std::size_t>(row) * grid_.width + col] != 0;
  }
  /// Out-of-window pixels read as `outside`.
  bool get(int col, int row, bool outside = false) const {
    if (col < 0 || row < 0 || col >= grid_.width || row >= grid_.height) return outside;
    return at(col, row);
  }
  void set(std::size_t i, bool v = true) { bits_[i] = v ? 1 : 0; }
  void set(int col, int row, bool v = true) {
    bits_[static_cast<std::size_t>(row) * grid_.width + col] = v ? 1 : 0;
  }

  std::vector<std::uint8_t>& bits() { return bits_; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  std::size_t count() const {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), 1));
  }
  bool empty() const { return std::find(bits_.begin(), bits_.end(), 1) == bits_.end(); }

  RasterSet& operator|=(const RasterSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
    return *this;
  }
  RasterSet& operator&=(const RasterSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
    return *this;
  }
  /// Set difference.
  RasterSet& operator-=(const RasterSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= static_cast<std::uint8_t>(!o.bits_[i]);
    return *this;
  }
  friend RasterSet operator|(RasterSet a, const RasterSet& b) { return a |= b; }
  friend RasterSet operator&(RasterSet a, const RasterSet& b) { return a &= b; }
  friend RasterSet operator-(RasterSet a, const RasterSet& b) { return a -= b; }

  bool subset_of(const RasterSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < bits_.size(); ++i)
      if (bits_[i] && !o.bits_[i]) return false;
    return true;
  }

  void check_same(const RasterSet& o) const {
    if (!(grid_ == o.grid_)) throw Error(ErrorKind::InvalidArgument, "rasters use different grids");
  }

  friend bool operator==(const RasterSet&, const RasterSet&) = default;

 private:
  GridSpec grid_;
  std::vector<std::uint8_t> bits_;
};

/// Pixels whose centre satisfies `pred`.
template <class Pred>
RasterSet raster_from_predicate(const GridSpec& g, Pred&& pred) {
  RasterSet r(g);
  for (int row = 0; row < g.height; ++row)
    for (int col = 0; col < g.width; ++col)
      if (pred(g.center(col, row))) r.set(col, row);
  return r;
}

/// Pixels whose square meets the circle C(c, radius): centre within half a
/// pixel diagonal of the circle.
inline RasterSet circle_raster(const GridSpec& g, Complex c, double radius) {
  const double tol = g.delta() * std::sqrt(0.5);
  return raster_from_predicate(
      g, [&](Complex z) { return std::abs(std::abs(z - c) - radius) <= tol; });
}

inline RasterSet disk_raster(const GridSpec& g, Complex c, double radius) {
  return raster_from_predicate(g, [&](Complex z) { return std::abs(z - c) <= radius; });
}

inline RasterSet annulus_raster(const GridSpec& g, Complex c, double r_in, double r_out) {
  return raster_from_predicate(g, [&](Complex z) {
    const double m = std::abs(z - c);
    return m >= r_in && m <= r_out;
  });
}

// ---- PGM (P5) -------------------------------------------------------------

inline void write_pgm(std::ostream& os, const RasterSet& r) {
  const GridSpec& g = r.grid();
  char buf[512];
  std::snprintf(buf, sizeof buf, "P5\n# grid %.17g %.17g %.17g %.17g\n%d %d\n255\n", g.xmin,
                g.xmax, g.ymin, g.ymax, g.width, g.height);
  os << buf;
  std::vector<char> row(static_cast<std::size_t>(g.width));
  for (int y = 0; y < g.height; ++y) {
    for (int x = 0; x < g.width; ++x) row[x] = r.at(x, y) ? static_cast<char>(255) : 0;
    os.write(row.data(), static_cast<std::streamsize>(row.size()));
  }
}

inline void write_pgm(const std::string& path, const RasterSet& r) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::Io, "cannot open '" + path + "' for writing");
  write_pgm(os, r);
}

inline RasterSet read_pgm(std::istream& is) {
  auto next_token = [&](std::optional<GridSpec>* grid_out) {
    std::string tok;
    while (true) {
      int c = is.peek();
      if (c == EOF) throw Error(ErrorKind::Parse, "truncated PGM header");
      if (std::isspace(c)) {
        is.get();
        continue;
      }
      if (c == '#') {
        std::string line;
        std::getline(is, line);
        std::istringstream ls(line);
        std::string hash, key;
        ls >> hash >> key;
        if (key == "grid" && grid_out) {
          GridSpec g;
          if (ls >> g.xmin >> g.xmax >> g.ymin >> g.ymax) *grid_out = g;
        }
        continue;
      }
      break;
    }
    while (is.peek() != EOF && !std::isspace(is.peek()) && is.peek() != '#')
      tok.push_back(static_cast<char>(is.get()));
    return tok;
  };
  std::optional<GridSpec> grid;
  if (next_token(&grid) != "P5") throw Error(ErrorKind::Parse, "not a binary PGM (P5)");
  int w = 0, h = 0, maxval = 0;
  try {
    w = std::stoi(next_token(&grid));
    h = std::stoi(next_token(&grid));
    maxval = std::stoi(next_token(&grid));
  } catch (const std::exception&) {
    throw Error(ErrorKind::Parse, "malformed PGM header");
  }
  if (maxval != 255) throw Error(ErrorKind::Parse, "PGM maxval must be 255");
  is.get();  // single whitespace before the raster
  if (!grid) throw Error(ErrorKind::Parse, "PGM lacks a '# grid' comment");
  grid->width = w;
  grid->height = h;
  grid->validate();
  RasterSet r(*grid);
  std::vector<char> row(static_cast<std::size_t>(w));
  for (int y = 0; y < h; ++y) {
    if (!is.read(row.data(), w)) throw Error(ErrorKind::Parse, "truncated PGM raster");
    for (int x = 0; x < w; ++x)
      if (static_cast<unsigned char>(row[x]) >= 128) r.set(x, y);
  }
  return r;
}

inline RasterSet read_pgm(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorKind::Io, "cannot open '" + path + "'");
  return read_pgm(is);
}

}  // namespace semijulia

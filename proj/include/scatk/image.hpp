#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace scatk {

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct Shape {
  int h = 0;
  int w = 0;
  int c = 1;

  bool operator==(const Shape&) const = default;
  int pixels() const { return h * w; }
  std::size_t size() const { return static_cast<std::size_t>(h) * w * c; }
};

namespace detail {

// Dense H x W x C grid, row-major, channel-last. One canonical layout
// everywhere; 8-bit only at file boundaries.
struct Grid {
  Shape shape;
  std::vector<double> data;

  Grid() = default;
  explicit Grid(Shape s, double fill = 0.0) : shape(s), data(s.size(), fill) {}
  Grid(int h, int w, int c, double fill = 0.0) : Grid(Shape{h, w, c}, fill) {}

  double& at(int i, int j, int k = 0) {
    return data[(static_cast<std::size_t>(i) * shape.w + j) * shape.c + k];
  }
  double at(int i, int j, int k = 0) const {
    return data[(static_cast<std::size_t>(i) * shape.w + j) * shape.c + k];
  }
  std::size_t size() const { return data.size(); }
};

}  // namespace detail

/// Intensity grid; entries are expected in [0,1] after any clamp01 call.
struct Image : detail::Grid {
  using Grid::Grid;
};

/// Signed field with the same layout as Image (perturbations, noise, gradients).
struct DiffImage : detail::Grid {
  using Grid::Grid;
};

inline void check_same_shape(const Shape& a, const Shape& b, const char* where) {
  if (!(a == b))
    throw Error(std::string(where) + ": shape mismatch (" + std::to_string(a.h) + "x" +
                std::to_string(a.w) + "x" + std::to_string(a.c) + " vs " + std::to_string(b.h) +
                "x" + std::to_string(b.w) + "x" + std::to_string(b.c) + ")");
}

inline void clamp01(Image& img) {
  for (double& v : img.data) v = std::clamp(v, 0.0, 1.0);
}

inline Image clamped01(Image img) {
  clamp01(img);
  return img;
}

/// a - b as a signed field.
inline DiffImage diff(const Image& a, const Image& b) {
  check_same_shape(a.shape, b.shape, "diff");
  DiffImage d(a.shape);
  for (std::size_t i = 0; i < d.size(); ++i) d.data[i] = a.data[i] - b.data[i];
  return d;
}

/// base + t * d, no clamping.
inline Image shifted(const Image& base, const DiffImage& d, double t = 1.0) {
  check_same_shape(base.shape, d.shape, "shifted");
  Image out = base;
  for (std::size_t i = 0; i < out.size(); ++i) out.data[i] += t * d.data[i];
  return out;
}

inline DiffImage scaled(DiffImage d, double t) {
  for (double& v : d.data) v *= t;
  return d;
}

inline DiffImage add(const DiffImage& a, const DiffImage& b, double tb = 1.0) {
  check_same_shape(a.shape, b.shape, "add");
  DiffImage out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.data[i] += tb * b.data[i];
  return out;
}

inline double dot(const DiffImage& a, const DiffImage& b) {
  check_same_shape(a.shape, b.shape, "dot");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a.data[i] * b.data[i];
  return s;
}

}  // namespace scatk

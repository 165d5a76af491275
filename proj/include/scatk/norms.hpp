#pragma once

#include <cmath>

#include "scatk/image.hpp"

namespace scatk {

/// Euclidean norm over all entries.
inline double l2_norm(const DiffImage& d) {
  double s = 0;
  for (double v : d.data) s += v * v;
  return std::sqrt(s);
}

/// Max absolute entry.
inline double linf_norm(const DiffImage& d) {
  double m = 0;
  for (double v : d.data) m = std::max(m, std::fabs(v));
  return m;
}

/// l2 norm divided by the scaling ratio; lets perturbations in different
/// resolutions be compared on one axis.
inline double scaled_l2(const DiffImage& d, double beta) {
  if (beta < 1.0) throw Error("scaled_l2: invalid ratio, beta must be >= 1");
  return l2_norm(d) / beta;
}

inline double mse(const Image& a, const Image& b) {
  check_same_shape(a.shape, b.shape, "mse");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a.data[i] - b.data[i];
    s += d * d;
  }
  return s / static_cast<double>(a.size());
}

}  // namespace scatk

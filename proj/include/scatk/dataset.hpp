#pragma once

#include <vector>

#include "scatk/image.hpp"
#include "scatk/rng.hpp"

namespace scatk {

struct Sample {
  Image image;
  int label = 0;
};

struct Dataset {
  std::vector<Sample> samples;
  int class_count = 0;
};

namespace detail {

inline void draw_shape(Image& img, int kind, int ci, int cj, int radius, double fg) {
  const int h = img.shape.h, w = img.shape.w;
  auto put = [&](int i, int j) {
    if (i >= 0 && i < h && j >= 0 && j < w)
      for (int k = 0; k < img.shape.c; ++k) img.at(i, j, k) = fg;
  };
  switch (kind) {
    case 0:  // filled rectangle
      for (int i = ci - radius; i <= ci + radius; ++i)
        for (int j = cj - radius; j <= cj + radius; ++j) put(i, j);
      break;
    case 1:  // filled disk
      for (int i = ci - radius; i <= ci + radius; ++i)
        for (int j = cj - radius; j <= cj + radius; ++j)
          if ((i - ci) * (i - ci) + (j - cj) * (j - cj) <= radius * radius) put(i, j);
      break;
    default: {  // cross
      const int arm = std::max(1, radius / 3);
      for (int i = ci - radius; i <= ci + radius; ++i)
        for (int j = cj - arm; j <= cj + arm; ++j) put(i, j);
      for (int i = ci - arm; i <= ci + arm; ++i)
        for (int j = cj - radius; j <= cj + radius; ++j) put(i, j);
      break;
    }
  }
}

}  // namespace detail

/// Labeled geometric-shape images (rectangle / disk / cross with size
/// buckets), deterministic under seed. Classes are assigned round-robin so
/// every class is populated. Lets the whole suite run with zero downloads.
inline Dataset synth_dataset(Rng& rng, int n, int side, int class_count) {
  if (class_count < 2 || class_count > 10)
    throw Error("synth_dataset: class_count must be in [2,10]");
  if (side < 8) throw Error("synth_dataset: side too small (must be >= 8)");
  Dataset ds;
  ds.class_count = class_count;
  ds.samples.reserve(static_cast<std::size_t>(std::max(n, 0)));
  for (int idx = 0; idx < n; ++idx) {
    const int label = idx % class_count;
    const int kind = label % 3;
    const int bucket = label / 3;  // 0..3 size buckets distinguish classes beyond the 3 shapes
    const double base_frac = 0.14 + 0.08 * bucket;

    Image img(side, side, 1);
    const double bg = 0.05 + 0.30 * rng.uniform();
    const double fg = 0.65 + 0.30 * rng.uniform();
    for (double& v : img.data) v = bg;

    const int radius =
        std::max(2, static_cast<int>(side * base_frac * (0.9 + 0.2 * rng.uniform())));
    const int margin = radius + 1;
    const int ci = margin + rng.uniform_int(std::max(1, side - 2 * margin));
    const int cj = margin + rng.uniform_int(std::max(1, side - 2 * margin));
    detail::draw_shape(img, kind, ci, cj, radius, fg);

    // light texture so images are not piecewise constant
    for (double& v : img.data) v = std::clamp(v + 0.02 * (rng.uniform() - 0.5), 0.0, 1.0);
    ds.samples.push_back({std::move(img), label});
  }
  return ds;
}

}  // namespace scatk

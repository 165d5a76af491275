#pragma once

#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "scatk/image.hpp"

namespace scatk {

enum class ScalerKind { nearest, bilinear, area };

inline std::string to_string(ScalerKind k) {
  switch (k) {
    case ScalerKind::nearest: return "nearest";
    case ScalerKind::bilinear: return "bilinear";
    case ScalerKind::area: return "area";
  }
  return "?";
}

inline ScalerKind scaler_kind_from_string(const std::string& s) {
  if (s == "nearest") return ScalerKind::nearest;
  if (s == "bilinear") return ScalerKind::bilinear;
  if (s == "area") return ScalerKind::area;
  throw Error("unknown scaler kind '" + s + "' (nearest|bilinear|area)");
}

/// A downscaling algorithm with fixed input/output shapes. Only beta >= 1 is
/// allowed; beta == 1 acts as the identity edge case.
struct ScalerSpec {
  ScalerKind kind = ScalerKind::bilinear;
  int in_h = 0, in_w = 0;
  int out_h = 0, out_w = 0;

  double beta_h() const { return static_cast<double>(in_w) / out_w; }
  double beta_v() const { return static_cast<double>(in_h) / out_h; }
  double beta() const { return std::min(beta_h(), beta_v()); }

  void validate() const {
    if (in_h <= 0 || in_w <= 0 || out_h <= 0 || out_w <= 0)
      throw Error("ScalerSpec: shapes must be positive");
    if (out_h > in_h || out_w > in_w)
      throw Error("ScalerSpec: downscaling only (out shape must not exceed in shape)");
  }
};

/// Per-output-pixel 1D kernel: list of (source index, weight) pairs with the
/// weights summing to 1. Zero weights are dropped so the support is exact.
using AxisWeights = std::vector<std::vector<std::pair<int, double>>>;

/// Half-pixel-center convention: source coordinate of output pixel i is
/// (i + 0.5) * ratio - 0.5, matching mainstream imaging libraries. Bilinear
/// keeps a fixed 2-pixel support per axis regardless of the ratio; area
/// covers the full [i*ratio, (i+1)*ratio) span with uniform weights.
inline AxisWeights axis_weights(ScalerKind kind, int in, int out) {
  const double ratio = static_cast<double>(in) / out;
  AxisWeights w(static_cast<std::size_t>(out));
  for (int i = 0; i < out; ++i) {
    auto& entry = w[static_cast<std::size_t>(i)];
    switch (kind) {
      case ScalerKind::nearest: {
        // round-half-up of (i + 0.5) * ratio - 0.5
        int src = static_cast<int>(std::floor((i + 0.5) * ratio));
        src = std::clamp(src, 0, in - 1);
        entry.push_back({src, 1.0});
        break;
      }
      case ScalerKind::bilinear: {
        const double s = (i + 0.5) * ratio - 0.5;
        const int i0 = static_cast<int>(std::floor(s));
        const double frac = s - i0;
        const int a = std::clamp(i0, 0, in - 1);
        const int b = std::clamp(i0 + 1, 0, in - 1);
        if (a == b) {
          entry.push_back({a, 1.0});
        } else {
          if (1.0 - frac > 0.0) entry.push_back({a, 1.0 - frac});
          if (frac > 0.0) entry.push_back({b, frac});
        }
        break;
      }
      case ScalerKind::area: {
        const double x0 = i * ratio;
        const double x1 = (i + 1) * ratio;
        const int j0 = static_cast<int>(std::floor(x0));
        const int j1 = std::min(in, static_cast<int>(std::ceil(x1)));
        double total = 0;
        for (int j = j0; j < j1; ++j) {
          const double overlap = std::min(x1, static_cast<double>(j + 1)) -
                                 std::max(x0, static_cast<double>(j));
          if (overlap > 0) {
            entry.push_back({j, overlap});
            total += overlap;
          }
        }
        if (entry.empty()) throw Error("axis_weights: empty area kernel");
        for (auto& e : entry) e.second /= total;
        break;
      }
    }
  }
  return w;
}

/// Uniform beta x beta kernel with each entry 1/beta^2 (the robust scaling
/// representative; integer ratios only).
inline std::vector<std::vector<double>> area_kernel(double beta) {
  const double r = std::round(beta);
  if (beta < 1.0 || std::fabs(beta - r) > 1e-12)
    throw Error("area_kernel: beta must be a positive integer");
  const int b = static_cast<int>(r);
  return std::vector<std::vector<double>>(
      static_cast<std::size_t>(b), std::vector<double>(static_cast<std::size_t>(b), 1.0 / (b * b)));
}

namespace detail {

template <class GridT>
GridT apply_separable(const GridT& src, const AxisWeights& row_w, const AxisWeights& col_w) {
  const int in_h = src.shape.h, in_w = src.shape.w, c = src.shape.c;
  const int out_h = static_cast<int>(row_w.size());
  const int out_w = static_cast<int>(col_w.size());
  GridT tmp(Shape{out_h, in_w, c});
  for (int i = 0; i < out_h; ++i)
    for (const auto& [r, wv] : row_w[static_cast<std::size_t>(i)])
      for (int j = 0; j < in_w; ++j)
        for (int k = 0; k < c; ++k) tmp.at(i, j, k) += wv * src.at(r, j, k);
  GridT out(Shape{out_h, out_w, c});
  for (int j = 0; j < out_w; ++j)
    for (const auto& [s, wh] : col_w[static_cast<std::size_t>(j)])
      for (int i = 0; i < out_h; ++i)
        for (int k = 0; k < c; ++k) out.at(i, j, k) += wh * tmp.at(i, s, k);
  return out;
}

template <class GridT>
GridT apply_separable_adjoint(const GridT& g, const AxisWeights& row_w, const AxisWeights& col_w,
                              int in_h, int in_w) {
  const int out_h = static_cast<int>(row_w.size());
  const int out_w = static_cast<int>(col_w.size());
  const int c = g.shape.c;
  GridT tmp(Shape{in_h, out_w, c});
  for (int i = 0; i < out_h; ++i)
    for (const auto& [r, wv] : row_w[static_cast<std::size_t>(i)])
      for (int j = 0; j < out_w; ++j)
        for (int k = 0; k < c; ++k) tmp.at(r, j, k) += wv * g.at(i, j, k);
  GridT out(Shape{in_h, in_w, c});
  for (int j = 0; j < out_w; ++j)
    for (const auto& [s, wh] : col_w[static_cast<std::size_t>(j)])
      for (int i = 0; i < in_h; ++i)
        for (int k = 0; k < c; ++k) out.at(i, s, k) += wh * tmp.at(i, j, k);
  return out;
}

}  // namespace detail

template <class GridT>
GridT scale_grid(const ScalerSpec& spec, const GridT& img) {
  spec.validate();
  if (img.shape.h != spec.in_h || img.shape.w != spec.in_w)
    throw Error("scale: image shape does not match spec in_shape");
  const auto rw = axis_weights(spec.kind, spec.in_h, spec.out_h);
  const auto cw = axis_weights(spec.kind, spec.in_w, spec.out_w);
  return detail::apply_separable(img, rw, cw);
}

inline Image scale(const ScalerSpec& spec, const Image& img) { return scale_grid(spec, img); }
inline DiffImage scale(const ScalerSpec& spec, const DiffImage& d) { return scale_grid(spec, d); }

/// Transpose of the scale() linear operator; backpropagation through the
/// coefficient-matrix form and the projection used by subspace noise.
inline DiffImage adjoint_scale(const ScalerSpec& spec, const DiffImage& d_lr) {
  spec.validate();
  if (d_lr.shape.h != spec.out_h || d_lr.shape.w != spec.out_w)
    throw Error("adjoint_scale: field shape does not match spec out_shape");
  const auto rw = axis_weights(spec.kind, spec.in_h, spec.out_h);
  const auto cw = axis_weights(spec.kind, spec.in_w, spec.out_w);
  return detail::apply_separable_adjoint(d_lr, rw, cw, spec.in_h, spec.in_w);
}

/// Bilinear upscaling (used by the unscaling detector round trip and for
/// building HR sources from LR datasets). The axis formula handles out > in.
template <class GridT>
GridT upscale_bilinear_grid(const GridT& img, int out_h, int out_w) {
  const auto rw = axis_weights(ScalerKind::bilinear, img.shape.h, out_h);
  const auto cw = axis_weights(ScalerKind::bilinear, img.shape.w, out_w);
  return detail::apply_separable(img, rw, cw);
}

inline Image upscale_bilinear(const Image& img, int out_h, int out_w) {
  return upscale_bilinear_grid(img, out_h, out_w);
}

inline DiffImage adjoint_upscale_bilinear(const DiffImage& g, int in_h, int in_w) {
  const auto rw = axis_weights(ScalerKind::bilinear, in_h, g.shape.h);
  const auto cw = axis_weights(ScalerKind::bilinear, in_w, g.shape.w);
  return detail::apply_separable_adjoint(g, rw, cw, in_h, in_w);
}

}  // namespace scatk

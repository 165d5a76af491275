#pragma once

#include <cstdint>
#include <vector>

#include "scatk/coeffs.hpp"
#include "scatk/linalg.hpp"
#include "scatk/scaling.hpp"

namespace scatk {

/// Boolean grid over the scaler input; true marks pixels whose perturbation
/// reaches the output (the support of the non-uniform kernel).
struct VulnerabilityMask {
  int h = 0;
  int w = 0;
  std::vector<std::uint8_t> m;

  VulnerabilityMask() = default;
  VulnerabilityMask(int hh, int ww, bool fill = false)
      : h(hh), w(ww), m(static_cast<std::size_t>(hh) * ww, fill ? 1 : 0) {}

  bool at(int i, int j) const { return m[static_cast<std::size_t>(i) * w + j] != 0; }
  void set(int i, int j, bool v) { m[static_cast<std::size_t>(i) * w + j] = v ? 1 : 0; }
  int count_true() const {
    int n = 0;
    for (auto v : m) n += v != 0;
    return n;
  }
  double fraction_true() const { return static_cast<double>(count_true()) / (h * w); }
};

inline VulnerabilityMask full_mask(int h, int w) { return VulnerabilityMask(h, w, true); }

constexpr double kMaskRidge = 1e-10;
constexpr double kMaskThreshold = 1e-8;

/// Solves L S R = 1 for S through the ridge-stabilized pseudo-inverses and
/// marks every entry of |S*| above a small threshold as vulnerable. The tiny
/// ridge keeps rank-deficient shapes solvable without moving the support.
inline VulnerabilityMask identify_mask(const ScalerSpec& spec) {
  const CoefficientMatrices cm = build_matrices(spec);
  const Mat Lp = right_pinv(cm.L, kMaskRidge);  // in_h x out_h
  const Mat Rp = left_pinv(cm.R, kMaskRidge);   // out_w x in_w
  Mat ones(spec.out_h, spec.out_w, 1.0);
  const Mat S = mul(mul(Lp, ones), Rp);
  VulnerabilityMask mask(spec.in_h, spec.in_w);
  for (int i = 0; i < spec.in_h; ++i)
    for (int j = 0; j < spec.in_w; ++j) mask.set(i, j, std::fabs(S.at(i, j)) > kMaskThreshold);
  return mask;
}

}  // namespace scatk

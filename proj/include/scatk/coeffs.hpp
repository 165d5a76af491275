#pragma once

#include <cmath>
#include <functional>

#include "scatk/linalg.hpp"
#include "scatk/rng.hpp"
#include "scatk/scaling.hpp"

namespace scatk {

/// Exact linear-operator form of a separable scaler: scale(S) = L x S x R.
struct CoefficientMatrices {
  Mat L;  // out_h x in_h
  Mat R;  // in_w x out_w
};

inline CoefficientMatrices build_matrices(const ScalerSpec& spec) {
  spec.validate();
  const auto rw = axis_weights(spec.kind, spec.in_h, spec.out_h);
  const auto cw = axis_weights(spec.kind, spec.in_w, spec.out_w);
  CoefficientMatrices m;
  m.L = Mat(spec.out_h, spec.in_h);
  for (int i = 0; i < spec.out_h; ++i)
    for (const auto& [r, wv] : rw[static_cast<std::size_t>(i)]) m.L.at(i, r) = wv;
  m.R = Mat(spec.in_w, spec.out_w);
  for (int j = 0; j < spec.out_w; ++j)
    for (const auto& [s, wh] : cw[static_cast<std::size_t>(j)]) m.R.at(s, j) = wh;
  return m;
}

/// L x S x R applied per channel.
inline Image apply_matrices(const CoefficientMatrices& m, const Image& img) {
  const int c = img.shape.c;
  Image out(m.L.rows, m.R.cols, c);
  for (int k = 0; k < c; ++k) {
    Mat S(img.shape.h, img.shape.w);
    for (int i = 0; i < img.shape.h; ++i)
      for (int j = 0; j < img.shape.w; ++j) S.at(i, j) = img.at(i, j, k);
    const Mat D = mul(mul(m.L, S), m.R);
    for (int i = 0; i < out.shape.h; ++i)
      for (int j = 0; j < out.shape.w; ++j) out.at(i, j, k) = D.at(i, j);
  }
  return out;
}

/// Recovers (L, R) from a black-box separable linear scaler with O(m+n)
/// probes: n column probes give the rows of R up to one common factor, m row
/// probes give the columns of L up to another, and a single unit-pixel probe
/// resolves the split by outer-product division. A randomized residual check
/// rejects nonlinear scalers.
inline CoefficientMatrices extract_matrices(const std::function<Image(const Image&)>& scaler,
                                            int in_h, int in_w, int out_h, int out_w, Rng& rng,
                                            double tol = 1e-6) {
  const int m = in_h, n = in_w, p = out_h, q = out_w;
  auto probe = [&](const Image& s) {
    Image d = scaler(s);
    if (d.shape.h != p || d.shape.w != q || d.shape.c != 1)
      throw Error("extract_matrices: scaler output shape mismatch");
    return d;
  };

  // column probes: scaler(1_m e_j^T) = (L 1_m) (e_j^T R), every row a multiple of R[j,:]
  std::vector<Image> col_resp;
  col_resp.reserve(static_cast<std::size_t>(n));
  std::vector<double> out_row_mag(static_cast<std::size_t>(p), 0.0);
  for (int j = 0; j < n; ++j) {
    Image s(m, n, 1);
    for (int i = 0; i < m; ++i) s.at(i, j) = 1.0;
    col_resp.push_back(probe(s));
    for (int r = 0; r < p; ++r)
      for (int cq = 0; cq < q; ++cq) out_row_mag[static_cast<std::size_t>(r)] += std::fabs(col_resp.back().at(r, cq));
  }
  int pref = 0;
  for (int r = 1; r < p; ++r)
    if (out_row_mag[static_cast<std::size_t>(r)] > out_row_mag[static_cast<std::size_t>(pref)]) pref = r;
  Mat R_scaled(n, q);  // = u[pref] * R
  for (int j = 0; j < n; ++j)
    for (int cq = 0; cq < q; ++cq) R_scaled.at(j, cq) = col_resp[static_cast<std::size_t>(j)].at(pref, cq);

  // row probes: scaler(e_i 1_n^T) = (L e_i) (1_n^T R), every column a multiple of L[:,i]
  std::vector<Image> row_resp;
  row_resp.reserve(static_cast<std::size_t>(m));
  std::vector<double> out_col_mag(static_cast<std::size_t>(q), 0.0);
  for (int i = 0; i < m; ++i) {
    Image s(m, n, 1);
    for (int j = 0; j < n; ++j) s.at(i, j) = 1.0;
    row_resp.push_back(probe(s));
    for (int r = 0; r < p; ++r)
      for (int cq = 0; cq < q; ++cq) out_col_mag[static_cast<std::size_t>(cq)] += std::fabs(row_resp.back().at(r, cq));
  }
  int qref = 0;
  for (int cq = 1; cq < q; ++cq)
    if (out_col_mag[static_cast<std::size_t>(cq)] > out_col_mag[static_cast<std::size_t>(qref)]) qref = cq;
  Mat L_scaled(p, m);  // = w[qref] * L
  for (int i = 0; i < m; ++i)
    for (int r = 0; r < p; ++r) L_scaled.at(r, i) = row_resp[static_cast<std::size_t>(i)].at(r, qref);

  // unit-pixel probe at the strongest (i0, j0): scaler(e_i0 e_j0^T) = L[:,i0] R[j0,:]^T
  int i0 = 0, j0 = 0;
  {
    double best = -1;
    for (int i = 0; i < m; ++i) {
      double mag = 0;
      for (int r = 0; r < p; ++r) mag += std::fabs(L_scaled.at(r, i));
      if (mag > best) { best = mag; i0 = i; }
    }
    best = -1;
    for (int j = 0; j < n; ++j) {
      double mag = 0;
      for (int cq = 0; cq < q; ++cq) mag += std::fabs(R_scaled.at(j, cq));
      if (mag > best) { best = mag; j0 = j; }
    }
  }
  Image unit(m, n, 1);
  unit.at(i0, j0) = 1.0;
  const Image W = probe(unit);
  int wa = 0, wb = 0;
  double wbest = -1;
  for (int r = 0; r < p; ++r)
    for (int cq = 0; cq < q; ++cq)
      if (std::fabs(W.at(r, cq)) > wbest) { wbest = std::fabs(W.at(r, cq)); wa = r; wb = cq; }
  if (wbest < 1e-12) throw Error("extract_matrices: degenerate operator (zero unit response)");
  // L_scaled R_scaled = (w[qref] u[pref]) L R elementwise on the outer product
  const double c_total = L_scaled.at(wa, i0) * R_scaled.at(j0, wb) / W.at(wa, wb);

  // normalize so rows of L sum to 1; the remaining factor belongs to R
  double row_sum = 0;
  for (int r = 0; r < p; ++r)
    for (int i = 0; i < m; ++i) row_sum += L_scaled.at(r, i);
  const double c_l = row_sum / p;
  if (std::fabs(c_l) < 1e-12) throw Error("extract_matrices: degenerate operator (zero row sums)");
  const double c_r = c_total / c_l;

  CoefficientMatrices out;
  out.L = Mat(p, m);
  for (int r = 0; r < p; ++r)
    for (int i = 0; i < m; ++i) out.L.at(r, i) = L_scaled.at(r, i) / c_l;
  out.R = Mat(n, q);
  for (int j = 0; j < n; ++j)
    for (int cq = 0; cq < q; ++cq) out.R.at(j, cq) = R_scaled.at(j, cq) / c_r;

  // randomized residual check; failures mean the black box is not the linear
  // separable operator we just fit (e.g. a clamped scaler)
  for (int trial = 0; trial < 3; ++trial) {
    Image s(m, n, 1);
    for (double& v : s.data) v = rng.uniform();
    const Image want = probe(s);
    const Image got = apply_matrices(out, s);
    for (std::size_t idx = 0; idx < want.size(); ++idx)
      if (std::fabs(want.data[idx] - got.data[idx]) > tol)
        throw Error("extract_matrices: nonlinearity detected (probe residual above tolerance)");
  }
  return out;
}

inline CoefficientMatrices extract_matrices(const std::function<Image(const Image&)>& scaler,
                                            const ScalerSpec& shapes, Rng& rng, double tol = 1e-6) {
  return extract_matrices(scaler, shapes.in_h, shapes.in_w, shapes.out_h, shapes.out_w, rng, tol);
}

}  // namespace scatk

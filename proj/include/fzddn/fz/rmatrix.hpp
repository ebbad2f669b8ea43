#pragma once

#include <utility>
#include <vector>

#include "fzddn/core/spectral_point.hpp"
#include "fzddn/dihedral/dihedral.hpp"

namespace fzddn {

/// Checkerboard R-matrix with rapidity pairs x = (x1, x2), y = (y1, y2).
CMatrix fz_rmatrix(const RootContext& ctx, cplx x1, cplx x2, cplx y1, cplx y2);

/// Two-parameter limit of the checkerboard model in the original basis.
CMatrix limit_rmatrix_raw(const RootContext& ctx, const SpectralPoint& p);

/// (S, S^-1) of the discrete Fourier-type basis change; with this pair,
/// (S (x) S) R_raw (S (x) S)^-1 = rmatrix_dd.
std::pair<CMatrix, CMatrix> basis_S(const RootContext& ctx);

/// R-matrix in the basis exposing the D(D_n) symmetry, from its closed form.
CMatrix rmatrix_dd(const RootContext& ctx, const SpectralPoint& p);

/// N(z1, z2) = (1/n) prod_{k=1}^{(n-1)/2} (z1 - w^{4k})(z2 - w^{-4k}).
cplx normalization_N(const RootContext& ctx, const SpectralPoint& p);

/// N * rmatrix_dd, evaluated directly (fails on the poles of rmatrix_dd).
CMatrix rmatrix_normalized(const RootContext& ctx, const SpectralPoint& p);

/// Normalized R-matrix as a polynomial of degree (n-1)/2 in each variable.
/// Coefficients are recovered once by interpolation on circle nodes away from
/// the unit circle; evaluation is then pole free everywhere.
class NormalizedRMatrix {
 public:
  explicit NormalizedRMatrix(const RootContext& ctx);

  const RootContext& context() const { return ctx_; }
  int degree() const { return degree_; }
  /// Coefficient of z1^k z2^l, 0 <= k, l <= degree.
  const CMatrix& coefficient(int k, int l) const;
  CMatrix operator()(const SpectralPoint& p) const;
  CMatrix operator()(cplx z1, cplx z2) const { return (*this)({z1, z2}); }
  /// lim R(z) / ((1 + z1^d)(1 + z2^d)) as each z_a tends to 0 (false) or infinity (true).
  const CMatrix& corner(bool z1_infinite, bool z2_infinite) const;
  /// Largest coefficient beyond the nominal degree, relative to the largest
  /// coefficient overall, measured on one extra interpolation order.
  double polynomiality_defect() const { return defect_; }

 private:
  RootContext ctx_;
  int degree_;
  std::vector<CMatrix> coeffs_;  // (degree+1)^2, index k * (degree+1) + l
  double defect_ = 0.0;
};

}  // namespace fzddn

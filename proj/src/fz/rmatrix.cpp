#include "fzddn/fz/rmatrix.hpp"

#include <cmath>
#include <numbers>

#include "fzddn/core/error.hpp"
#include "fzddn/fz/weights.hpp"

namespace fzddn {
namespace {

// Flat index of e_{r1,c1} (x) e_{r2,c2} inside an n^2 x n^2 matrix.
struct Slot {
  long row;
  long col;
};
Slot slot(int n, int r1, int c1, int r2, int c2) {
  return {static_cast<long>(position(r1, n)) * n + position(r2, n), static_cast<long>(position(c1, n)) * n + position(c2, n)};
}

void add(CMatrix& m, int n, int r1, int c1, int r2, int c2, cplx v) {
  const Slot s = slot(n, r1, c1, r2, c2);
  m(s.row, s.col) += v;
}

}  // namespace

CMatrix fz_rmatrix(const RootContext& ctx, cplx x1, cplx x2, cplx y1, cplx y2) {
  const int n = ctx.n();
  const WeightTable t11(ctx, x1 / y1), t21(ctx, x2 / y1), t22(ctx, x2 / y2), t12(ctx, x1 / y2);
  CMatrix r = CMatrix::Zero(n * n, n * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d)
          add(r, n, a, b, c, d, t11.Wbar(b - c) * t21.W(b - d) * t22.Wbar(a - d) * t12.W(a - c));
  return r;
}

CMatrix limit_rmatrix_raw(const RootContext& ctx, const SpectralPoint& p) {
  const int n = ctx.n();
  const WeightTable t1(ctx, p.z1), t2(ctx, 1.0 / p.z2);
  CMatrix r = CMatrix::Zero(n * n, n * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      for (int c = 1; c <= n; ++c)
        for (int d = 1; d <= n; ++d) {
          const double sign = ((a + b + c + d) % 2 == 0) ? 1.0 : -1.0;
          const long e = static_cast<long>(a - c) * (a - c) - static_cast<long>(b - d) * (b - d);
          add(r, n, a, b, c, d, sign * ctx.lambda_pow(e) * t1.Wbar(b - c) * t2.Wbar(a - d));
        }
  return r;
}

std::pair<CMatrix, CMatrix> basis_S(const RootContext& ctx) {
  const int n = ctx.n();
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CMatrix s = CMatrix::Zero(n, n);
  CMatrix si = CMatrix::Zero(n, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const long e = 2L * j * (1 - j);
      s(position(2 * (i + j), n), position(i, n)) += scale * ctx.lambda_pow(e);
      si(position(i, n), position(2 * (i + j), n)) += scale * ctx.lambda_pow(-e);
    }
  return {s, si};
}

CMatrix rmatrix_dd(const RootContext& ctx, const SpectralPoint& p) {
  const int n = ctx.n();
  const WeightTable t1(ctx, p.z1), t2(ctx, 1.0 / p.z2);
  CMatrix r = CMatrix::Zero(n * n, n * n);
  for (int a = 1; a <= n; ++a)
    for (int j = 1; j <= n; ++j) {
      cplx coef = 0.0;
      for (int b = 1; b <= n; ++b) coef += ctx.w_pow(-2L * a * (2 * b - j)) * t1.Wbar(b) * t2.Wbar(b - j);
      for (int i = 1; i <= n; ++i) add(r, n, i + j, i + a, i + a + j, i, coef);
    }
  return r;
}

cplx normalization_N(const RootContext& ctx, const SpectralPoint& p) {
  cplx r = 1.0 / static_cast<double>(ctx.n());
  for (int k = 1; k <= ctx.half(); ++k) r *= (p.z1 - ctx.w_pow(4L * k)) * (p.z2 - ctx.w_pow(-4L * k));
  return r;
}

CMatrix rmatrix_normalized(const RootContext& ctx, const SpectralPoint& p) {
  return normalization_N(ctx, p) * rmatrix_dd(ctx, p);
}

NormalizedRMatrix::NormalizedRMatrix(const RootContext& ctx) : ctx_(ctx), degree_(ctx.half()) {
  const int n = ctx.n();
  const int m = degree_ + 2;  // one order beyond the nominal degree
  const double radius = 1.3;
  const double phase = 0.123;
  std::vector<cplx> nodes(m);
  for (int k = 0; k < m; ++k) nodes[k] = std::polar(radius, 2.0 * std::numbers::pi * (k + phase) / m);

  std::vector<CMatrix> values(static_cast<std::size_t>(m) * m);
  for (int p = 0; p < m; ++p)
    for (int q = 0; q < m; ++q) values[p * m + q] = rmatrix_normalized(ctx, {nodes[p], nodes[q]});

  // Discrete Fourier inversion on the scaled circle: c_k = (1/m) sum_p v_p node_p^{-k}.
  std::vector<CMatrix> full(static_cast<std::size_t>(m) * m, CMatrix::Zero(n * n, n * n));
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      CMatrix& c = full[k * m + l];
      for (int p = 0; p < m; ++p)
        for (int q = 0; q < m; ++q) c += values[p * m + q] * (std::pow(nodes[p], -k) * std::pow(nodes[q], -l));
      c /= static_cast<double>(m) * m;
    }

  double largest = 0.0;
  double beyond = 0.0;
  for (int k = 0; k < m; ++k)
    for (int l = 0; l < m; ++l) {
      const double v = full[k * m + l].norm();
      largest = std::max(largest, v);
      if (k > degree_ || l > degree_) beyond = std::max(beyond, v);
    }
  defect_ = largest > 0 ? beyond / largest : 0.0;

  coeffs_.reserve(static_cast<std::size_t>(degree_ + 1) * (degree_ + 1));
  for (int k = 0; k <= degree_; ++k)
    for (int l = 0; l <= degree_; ++l) coeffs_.push_back(full[k * m + l]);
}

const CMatrix& NormalizedRMatrix::coefficient(int k, int l) const {
  if (k < 0 || l < 0 || k > degree_ || l > degree_) throw Error(ErrorKind::invalid_dimension, "coefficient index out of range");
  return coeffs_[k * (degree_ + 1) + l];
}

CMatrix NormalizedRMatrix::operator()(const SpectralPoint& p) const {
  // Horner in z1 over Horner in z2.
  const int dim = ctx_.n() * ctx_.n();
  CMatrix out = CMatrix::Zero(dim, dim);
  for (int k = degree_; k >= 0; --k) {
    CMatrix inner = CMatrix::Zero(dim, dim);
    for (int l = degree_; l >= 0; --l) inner = inner * p.z2 + coefficient(k, l);
    out = out * p.z1 + inner;
  }
  return out;
}

const CMatrix& NormalizedRMatrix::corner(bool z1_infinite, bool z2_infinite) const {
  return coefficient(z1_infinite ? degree_ : 0, z2_infinite ? degree_ : 0);
}

}  // namespace fzddn

#include "fzddn/transfer/fusion.hpp"

#include <algorithm>
#include <cmath>

#include "fzddn/core/error.hpp"
#include "fzddn/core/tensor.hpp"
#include "fzddn/kernels/sweep.hpp"
#include "fzddn/transfer/lax.hpp"

namespace fzddn {
namespace {

CMatrix on(const CMatrix& op, int i, int j, std::initializer_list<int> dims) {
  const std::vector<int> d(dims);
  const int sites[] = {i, j};
  return embed(op, sites, d);
}

double three_site(const CMatrix& a, const CMatrix& b, const CMatrix& c, const CMatrix& c2, const CMatrix& b2,
                  const CMatrix& a2) {
  return bounded_residual(a * b * c, c2 * b2 * a2);
}

cplx ipow(cplx x, int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

cplx b_constant(const RootContext& ctx, bool infinite) { return infinite ? -kI / ctx.w() : cplx{1.0}; }
cplx c_constant(const RootContext& ctx, bool infinite) { return infinite ? kI / ctx.w() : cplx{1.0}; }

}  // namespace

std::pair<CMatrix, CMatrix> fusion_vectors(const RootContext& ctx) {
  const int n = ctx.n();
  const int h = ctx.half();
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix v = CMatrix::Zero(2 * n, 2 * n);
  CMatrix u = CMatrix::Zero(2 * n, 2 * n);
  auto index = [n](int aux, int k) { return (aux - 1) * n + position(k, n); };
  for (int j = 1; j <= n; ++j) {
    const int k = j - h;
    const cplx up = ctx.w_pow(k + h);
    const cplx down = ctx.w_pow(-k - h);
    for (int sign = 0; sign < 2; ++sign) {
      const double pm = sign == 0 ? 1.0 : -1.0;
      const int col = sign * n + j - 1;
      v(index(1, k), col) += s * up;
      v(index(2, k - 1), col) += s * pm * down;
      u(index(1, k - 1), col) += s * up;
      u(index(2, k), col) += s * pm * down;
    }
  }
  return {v, u};
}

BlockTriangularReport block_triangular_check(const NormalizedRMatrix& r, const SpectralPoint& p) {
  const RootContext& ctx = r.context();
  const int n = ctx.n();
  const long m = static_cast<long>(n) * n;
  const auto [v, u] = fusion_vectors(ctx);
  (void)u;
  const CMatrix v12 = kron(v, identity(n));
  const CMatrix lhs = on(l_op(ctx, kI * p.z1), 1, 3, {2, n, n}) * on(r(p), 2, 3, {2, n, n});
  // V is unitary, so V^-1 = V^dagger.
  const CMatrix t = v12.adjoint() * lhs * v12;
  const cplx w2 = ctx.w_pow(2);
  BlockTriangularReport out;
  out.upper_right = t.block(0, m, m, m).norm();
  out.top_left = bounded_residual(t.block(0, 0, m, m), (p.z1 / w2 + 1.0) * r({p.z1 / w2, p.z2}));
  out.bottom_right = bounded_residual(t.block(m, m, m, m), (p.z1 - 1.0) * r({p.z1 * w2, p.z2}));
  out.lower_left = t.block(m, 0, m, m);
  return out;
}

double relation_rll(const RootContext& ctx, cplx x, cplx y) {
  const int n = ctx.n();
  const CMatrix r = on(sixvertex_r(ctx, x), 1, 2, {2, 2, n});
  const CMatrix l13 = on(l_op(ctx, x * y), 1, 3, {2, 2, n});
  const CMatrix l23 = on(l_op(ctx, y), 2, 3, {2, 2, n});
  return three_site(r, l13, l23, l23, l13, r);
}

double relation_limit_rll(const RootContext& ctx, cplx x, cplx y) {
  const int n = ctx.n();
  const CMatrix r = on(sixvertex_r_scaled_limit(ctx), 1, 2, {2, 2, n});
  const CMatrix l13 = on(l_op(ctx, x), 1, 3, {2, 2, n});
  const CMatrix l23 = on(l_op_conj(ctx, y), 2, 3, {2, 2, n});
  return three_site(r, l13, l23, l23, l13, r);
}

double relation_llr(const RootContext& ctx, cplx x1, cplx y1, cplx y2) {
  const int n = ctx.n();
  const CMatrix l12 = on(l_op(ctx, x1), 1, 2, {2, n, n});
  const CMatrix l13 = on(l_op(ctx, x1 * y1), 1, 3, {2, n, n});
  const CMatrix r23 = on(rmatrix_normalized(ctx, {y1, y2}), 2, 3, {2, n, n});
  return three_site(l12, l13, r23, r23, l13, l12);
}

double relation_conj_llr(const RootContext& ctx, cplx x2, cplx y1, cplx y2) {
  const int n = ctx.n();
  const CMatrix l12 = on(l_op_conj(ctx, x2), 1, 2, {2, n, n});
  const CMatrix l13 = on(l_op_conj(ctx, x2 * y2), 1, 3, {2, n, n});
  const CMatrix r23 = on(rmatrix_normalized(ctx, {y1, y2}), 2, 3, {2, n, n});
  return three_site(l12, l13, r23, r23, l13, l12);
}

bool FusionReport::all_pass() const {
  return !pass.empty() && std::all_of(pass.begin(), pass.end(), [](bool b) { return b; });
}

double FusionReport::max_residual() const {
  return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

FunctionalRelation functional_relation(const ChainSpec& spec, const SpectralPoint& p, AuxFamily family) {
  const RootContext& ctx = spec.ctx;
  const int L = spec.sites;
  const cplx w = ctx.w();
  const cplx w2 = ctx.w_pow(2);
  const cplx wm2 = ctx.w_pow(-2);
  const bool first = family == AuxFamily::first;
  FunctionalRelation rel{};
  if (first) {
    rel.aux_argument = kI * p.z1;
    rel.point_a = {wm2 * p.z1, p.z2};
    rel.point_b = {w2 * p.z1, p.z2};
  } else {
    rel.aux_argument = -kI * p.z2;
    rel.point_a = {p.z1, w2 * p.z2};
    rel.point_b = {p.z1, wm2 * p.z2};
  }
  const cplx z = first ? p.z1 : p.z2;
  const cplx shift = first ? wm2 : w2;
  switch (spec.boundary) {
    case BoundaryKind::periodic:
      rel.coeff_a = ipow(shift * z + 1.0, L);
      rel.coeff_b = ipow(z - 1.0, L);
      break;
    case BoundaryKind::braided: {
      const bool inf = first ? spec.braid.z1_infinite : spec.braid.z2_infinite;
      cplx b = b_constant(ctx, inf);
      cplx c = c_constant(ctx, inf);
      if (!first) {
        b = std::conj(b);
        c = std::conj(c);
      }
      rel.coeff_a = ipow(b * (shift * z + 1.0), L);
      rel.coeff_b = ipow(c * (z - 1.0), L);
      break;
    }
    case BoundaryKind::open: {
      const double sign = (L % 2 == 0) ? 1.0 : -1.0;
      // The second family swaps w and 1/w inside f and g and is evaluated at w z2.
      const cplx a = first ? w : 1.0 / w;
      const cplx x = first ? z / w : w * z;
      const cplx x2 = x * x;
      const cplx den = 1.0 - x2 * x2;
      rel.coeff_a = (1.0 + a * a * x2) * (1.0 - x2 / (a * a)) / den * ipow(x / a + 1.0, 2 * L);
      rel.coeff_b = sign * (1.0 - a * a * x2) * (1.0 + x2 / (a * a)) / den * ipow(a * x - 1.0, 2 * L);
      break;
    }
    case BoundaryKind::twisted:
      throw Error(ErrorKind::not_applicable, "functional relations are not provided for twisted chains");
  }
  return rel;
}

bool fusion_point_admissible(const ChainSpec& spec, const SpectralPoint& p, AuxFamily family) {
  if (spec.boundary != BoundaryKind::open) return true;
  const cplx w = spec.ctx.w();
  const cplx x = family == AuxFamily::first ? p.z1 / w : w * p.z2;
  return std::abs(1.0 - x * x * x * x) > 1e-2;
}

double fusion_residual(const ChainSpec& spec, const NormalizedRMatrix& r, const SpectralPoint& p, AuxFamily family) {
  const FunctionalRelation rel = functional_relation(spec, p, family);
  const CMatrix lhs = transfer_t2(spec, rel.aux_argument, family) * transfer_t3(spec, r, p);
  const CMatrix rhs = rel.coeff_a * transfer_t3(spec, r, rel.point_a) + rel.coeff_b * transfer_t3(spec, r, rel.point_b);
  return bounded_residual(lhs, rhs);
}

FusionReport fusion_sweep(const ChainSpec& spec, const std::vector<SpectralPoint>& points, AuxFamily family,
                          double tol) {
  const NormalizedRMatrix r(spec.ctx);
  FusionReport out;
  out.relation = std::string(to_string(spec.boundary)) + (family == AuxFamily::first ? "/z1" : "/z2");
  if (spec.boundary == BoundaryKind::braided) out.relation += " " + spec.braid.label();
  out.points = points;
  out.tol = tol;
  out.residuals = kernels::sweep(points.size(), [&](std::size_t k) { return fusion_residual(spec, r, points[k], family); });
  for (double v : out.residuals) out.pass.push_back(v < tol);
  return out;
}

}  // namespace fzddn

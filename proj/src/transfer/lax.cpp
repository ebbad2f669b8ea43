#include "fzddn/transfer/lax.hpp"

#include "fzddn/core/error.hpp"

namespace fzddn {
namespace {

// Polynomial Lax operator A + z B, split so that coefficient conjugation is exact.
struct LinearLax {
  CMatrix constant;
  CMatrix linear;

  CMatrix at(cplx z) const { return constant + z * linear; }
  CMatrix conj_at(cplx z) const { return constant.conjugate() + z * linear.conjugate(); }
};

void add(CMatrix& m, int n, int a_row, int a_col, int q_row, int q_col, cplx v) {
  m(static_cast<long>(a_row - 1) * n + position(q_row, n), static_cast<long>(a_col - 1) * n + position(q_col, n)) += v;
}

LinearLax lax_L(const RootContext& ctx) {
  const int n = ctx.n();
  LinearLax l{CMatrix::Zero(2 * n, 2 * n), CMatrix::Zero(2 * n, 2 * n)};
  const cplx c = -kI / ctx.w();
  for (int k = 0; k < n; ++k) {
    add(l.constant, n, 1, 2, k, k, ctx.w_pow(2L * k));
    add(l.constant, n, 2, 1, k, k, ctx.w_pow(-2L * k));
    add(l.linear, n, 1, 1, k - 1, k, c);
    add(l.linear, n, 2, 2, k + 1, k, c);
  }
  return l;
}

LinearLax lax_L_prime(const RootContext& ctx) {
  const int n = ctx.n();
  LinearLax l{CMatrix::Zero(2 * n, 2 * n), CMatrix::Zero(2 * n, 2 * n)};
  const cplx c = -kI / ctx.w();
  for (int k = 0; k < n; ++k) {
    add(l.constant, n, 1, 1, k + 1, k, 1.0);
    add(l.constant, n, 2, 2, k - 1, k, 1.0);
    add(l.linear, n, 1, 2, k, k, c * ctx.w_pow(2L * k));
    add(l.linear, n, 2, 1, k, k, c * ctx.w_pow(-2L * k));
  }
  return l;
}

}  // namespace

CMatrix sixvertex_r(const RootContext& ctx, cplx z) {
  if (z == cplx{}) throw Error(ErrorKind::singular_parameter, "six-vertex R-matrix needs z != 0");
  const cplx w2 = ctx.w_pow(2);
  const cplx wm2 = ctx.w_pow(-2);
  const cplx a = w2 / z - wm2 * z;
  const cplx b = 1.0 / z - z;
  const cplx c = w2 - wm2;
  CMatrix r = CMatrix::Zero(4, 4);
  r(0, 0) = a;
  r(3, 3) = a;
  r(1, 1) = b;
  r(2, 2) = b;
  r(1, 2) = c;
  r(2, 1) = c;
  return r;
}

CMatrix sixvertex_r_scaled_limit(const RootContext& ctx) {
  CMatrix r = CMatrix::Zero(4, 4);
  r(0, 0) = ctx.w_pow(2);
  r(1, 1) = 1.0;
  r(2, 2) = 1.0;
  r(3, 3) = ctx.w_pow(2);
  return r;
}

CMatrix l_op(const RootContext& ctx, cplx z) { return lax_L(ctx).at(z); }
CMatrix l_op_prime(const RootContext& ctx, cplx z) { return lax_L_prime(ctx).at(z); }
CMatrix l_op_conj(const RootContext& ctx, cplx z) { return lax_L(ctx).conj_at(z); }
CMatrix l_op_prime_conj(const RootContext& ctx, cplx z) { return lax_L_prime(ctx).conj_at(z); }

CMatrix l_bar(const RootContext& ctx, bool infinite) {
  const LinearLax l = lax_L_prime(ctx);
  return infinite ? l.linear : l.constant;
}

}  // namespace fzddn

#include "fzddn/fz/projectors.hpp"

#include "fzddn/core/error.hpp"
#include "fzddn/fz/weights.hpp"

namespace fzddn {

std::vector<std::pair<int, int>> admissible_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  const int h = (n - 1) / 2;
  for (int b = 0; b <= h; ++b) out.emplace_back(0, b);
  for (int a = 1; a <= h; ++a)
    for (int b = 0; b < n; ++b) out.emplace_back(a, b);
  return out;
}

bool is_admissible(int n, int a, int b) {
  const int h = (n - 1) / 2;
  if (a == 0) return b >= 0 && b <= h;
  return a >= 1 && a <= h && b >= 0 && b < n;
}

CMatrix projector(const RootContext& ctx, int a, int b) {
  const int n = ctx.n();
  if (!is_admissible(n, a, b))
    throw Error(ErrorKind::invalid_pair, "inadmissible projector label (" + std::to_string(a) + "," + std::to_string(b) + ")");
  const double c = (a == 0 && b == 0) ? 0.5 : 1.0;
  CMatrix m = CMatrix::Zero(n * n, n * n);
  auto add = [&](int r1, int c1, int r2, int c2, cplx v) {
    m(static_cast<long>(position(r1, n)) * n + position(r2, n), static_cast<long>(position(c1, n)) * n + position(c2, n)) += v;
  };
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      add(i + a + j, i + a, i + j, i, ctx.w_pow(2L * b * j));
      add(i - a + j, i - a, i + j, i, ctx.w_pow(-2L * b * j));
    }
  return (c / n) * m;
}

cplx eigenfunction_f_z1(const RootContext& ctx, int a, int b, cplx z1) {
  cplx s = 0.0;
  for (int c = 1; c <= ctx.n(); ++c) s += ctx.w_pow(2L * (a + b) * c) * weight_Wbar(ctx, z1, c);
  return s;
}

cplx eigenfunction_f_z2(const RootContext& ctx, int diff, cplx z2) {
  cplx s = 0.0;
  for (int d = 1; d <= ctx.n(); ++d) s += ctx.w_pow(2L * diff * d) * weight_Wbar(ctx, 1.0 / z2, d);
  return s;
}

cplx eigenfunction_f(const RootContext& ctx, int a, int b, const SpectralPoint& p) {
  if (!is_admissible(ctx.n(), a, b))
    throw Error(ErrorKind::invalid_pair, "inadmissible projector label (" + std::to_string(a) + "," + std::to_string(b) + ")");
  return eigenfunction_f_z1(ctx, a, b, p.z1) * eigenfunction_f_z2(ctx, a - b, p.z2);
}

}  // namespace fzddn

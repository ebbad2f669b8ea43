#include "fzddn/fz/weights.hpp"

#include <algorithm>

#include "fzddn/core/error.hpp"

namespace fzddn {
namespace {

constexpr double kPoleGuard = 1e-12;

int reduced_length(const RootContext& ctx, long l) {
  const int n = ctx.n();
  const int r = static_cast<int>(((l % n) + n) % n);
  return std::min(r, n - r);
}

cplx guarded(cplx num, cplx den) {
  if (std::abs(den) < kPoleGuard) throw Error(ErrorKind::singular_parameter, "spectral parameter on a weight pole");
  return num / den;
}

}  // namespace

cplx weight_W(const RootContext& ctx, cplx z, long l) {
  cplx r = 1.0;
  for (int j = 1; j <= reduced_length(ctx, l); ++j) {
    const cplx a = ctx.lambda_pow(2 * j - 1);
    r *= guarded(a * z - 1.0, a - z);
  }
  return r;
}

cplx weight_Wbar(const RootContext& ctx, cplx z, long l) {
  cplx r = 1.0;
  for (int j = 1; j <= reduced_length(ctx, l); ++j)
    r *= guarded(ctx.lambda_pow(2 * j - 1) - ctx.lambda() * z, ctx.lambda_pow(2 * j) * z - 1.0);
  return r;
}

WeightTable::WeightTable(const RootContext& ctx, cplx z) : n(ctx.n()) {
  w_values.resize(n);
  wbar_values.resize(n);
  for (int l = 0; l < n; ++l) {
    w_values[l] = weight_W(ctx, z, l);
    wbar_values[l] = weight_Wbar(ctx, z, l);
  }
}

cplx WeightTable::W(long l) const { return w_values[((l % n) + n) % n]; }
cplx WeightTable::Wbar(long l) const { return wbar_values[((l % n) + n) % n]; }

}  // namespace fzddn

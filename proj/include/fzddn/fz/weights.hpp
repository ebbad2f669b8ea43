#pragma once

#include "fzddn/dihedral/dihedral.hpp"

namespace fzddn {

/// W(z|l) = prod_{j=1}^{l} (lambda^{2j-1} z - 1) / (lambda^{2j-1} - z), with l
/// reduced mod n and replaced by min(l, n - l). Throws singular-parameter when
/// a denominator has modulus below 1e-12.
cplx weight_W(const RootContext& ctx, cplx z, long l);

/// Wbar(z|l) = prod_{j=1}^{l} (lambda^{2j-1} - lambda z) / (lambda^{2j} z - 1).
cplx weight_Wbar(const RootContext& ctx, cplx z, long l);

/// Cached W and Wbar at one argument for l = 0..n-1.
struct WeightTable {
  WeightTable(const RootContext& ctx, cplx z);
  cplx W(long l) const;
  cplx Wbar(long l) const;

  int n;
  std::vector<cplx> w_values;
  std::vector<cplx> wbar_values;
};

}  // namespace fzddn

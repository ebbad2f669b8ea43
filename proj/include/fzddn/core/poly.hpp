#pragma once

#include <span>
#include <vector>

#include "fzddn/core/types.hpp"

namespace fzddn {

struct PolyFit {
  std::vector<cplx> coefficients;  // ascending powers, trailing zeros removed
  cplx leading;                    // p(z) = leading * prod (z - root)
  std::vector<cplx> roots;         // exact zeros first, then companion roots
  int degree = 0;
  double residual = 0.0;           // max |p(z_k) - v_k| / max |v_k|
};

cplx poly_eval(std::span<const cplx> coefficients, cplx z);

/// Newton polish of one root against p, damped by 0.5 whenever |p| grows.
cplx polish_root(std::span<const cplx> coefficients, cplx root, double tol = 1e-12, int max_iter = 50);

/// Least-squares fit of degree <= max_degree with automatic degree detection:
/// trailing (and leading-order) coefficients below 1e-8 max|c| are dropped.
/// Dropped low-order coefficients become exact zero roots. Throws
/// insufficient-samples with fewer than max_degree + 2 distinct points or a
/// rank-deficient Vandermonde system.
PolyFit poly_fit_roots(std::span<const cplx> points, std::span<const cplx> values, int max_degree);

}  // namespace fzddn

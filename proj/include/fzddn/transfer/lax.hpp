#pragma once

#include "fzddn/dihedral/dihedral.hpp"

namespace fzddn {

/// Zero-field six-vertex R-matrix on C^2 (x) C^2. Throws singular-parameter at z = 0.
CMatrix sixvertex_r(const RootContext& ctx, cplx z);

/// lim_{z -> 0} z r(z) = diag(w^2, 1, 1, w^2).
CMatrix sixvertex_r_scaled_limit(const RootContext& ctx);

// Lax operators on C^2 (aux) (x) C^n (quantum), aux factor first.

CMatrix l_op(const RootContext& ctx, cplx z);
/// Proportional to L(1/z)^-1.
CMatrix l_op_prime(const RootContext& ctx, cplx z);
/// conj(L(conj z)): the coefficient-conjugated polynomial in z.
CMatrix l_op_conj(const RootContext& ctx, cplx z);
/// conj(L'(conj z)).
CMatrix l_op_prime_conj(const RootContext& ctx, cplx z);
/// lim_{x -> z0} L'(x) / (1 + x) for z0 = 0 (false) or infinity (true).
CMatrix l_bar(const RootContext& ctx, bool infinite);

}  // namespace fzddn

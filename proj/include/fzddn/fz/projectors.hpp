#pragma once

#include <utility>
#include <vector>

#include "fzddn/core/spectral_point.hpp"
#include "fzddn/dihedral/dihedral.hpp"

namespace fzddn {

/// (0, b) for 0 <= b <= (n-1)/2, then (a, b) for 1 <= a <= (n-1)/2, 0 <= b < n.
std::vector<std::pair<int, int>> admissible_pairs(int n);
bool is_admissible(int n, int a, int b);

/// p^{(a,b)}; the prefactor is 1/2 for (0,0) and 1 otherwise. Throws
/// invalid-pair for inadmissible (a, b).
CMatrix projector(const RootContext& ctx, int a, int b);

/// sum_c w^{2(a+b)c} Wbar(z1|c).
cplx eigenfunction_f_z1(const RootContext& ctx, int a, int b, cplx z1);
/// sum_d w^{2 diff d} Wbar(1/z2|d), with diff = a - b.
cplx eigenfunction_f_z2(const RootContext& ctx, int diff, cplx z2);

/// Eigenvalue of P R(p) on the image of p^{(a,b)}.
cplx eigenfunction_f(const RootContext& ctx, int a, int b, const SpectralPoint& p);

}  // namespace fzddn

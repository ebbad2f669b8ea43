#pragma once

#include "fzddn/chain/spec.hpp"
#include "fzddn/fz/rmatrix.hpp"

namespace fzddn {

/// Closed-form H^(1) (which = 1) or H^(2) = P H^(1) P (which = 2).
CMatrix h_component(const RootContext& ctx, int which);

/// alpha1 H^(1) + alpha2 H^(2).
CMatrix local_h(const RootContext& ctx, double alpha1, double alpha2);

/// The same operator assembled from its D_n-orbit form (sum over a, b and gamma).
CMatrix local_h_dihedral_sum(const RootContext& ctx, double alpha1, double alpha2);

/// (pi(g)^-1 (x) I) H (pi(g) (x) I).
CMatrix twisted_local_h(const RootContext& ctx, const DihedralElement& g, double alpha1, double alpha2);

/// Two-site braid operator b = Rbar P at the limit point z0, where Rbar_12 is the
/// corresponding limit of R_21.
CMatrix braid_b(const NormalizedRMatrix& r, const BraidPoint& z0);
CMatrix braid_b(const RootContext& ctx, const BraidPoint& z0);

/// Explicit closed forms available for (0,0) and (0,inf); other points throw
/// not-applicable. The (0,inf) form agrees with braid_b only up to a scalar.
CMatrix braid_b_displayed(const RootContext& ctx, const BraidPoint& z0);

/// G = b_1 b_2 ... b_{L-1} on the full chain.
CMatrix braid_product(const CMatrix& b, int n, int L);

CMatrix global_hamiltonian(const ChainSpec& spec);

/// Generalized translation t(1): P_{1L}...P_{12} (periodic), K_1 P_12 P_23 ... (twisted),
/// b_1...b_{L-1} (braided, scalar dropped). Open chains throw not-applicable.
CMatrix translation_op(const ChainSpec& spec);

/// tr_0[P_0L Rbar_0L] on one site; a multiple of the identity.
CMatrix braided_closure_factor(const NormalizedRMatrix& r, const BraidPoint& z0);

struct ConjugacyComparison {
  bool same_class = false;
  double max_abs_difference = 0.0;
  bool equivalent = false;  // spectra agree within 1e-8
};

/// Compares sorted spectra of the twisted chains built from g and h.
ConjugacyComparison conjugacy_equivalence_check(const RootContext& ctx, int L, const DihedralElement& g,
                                                const DihedralElement& h, double alpha1 = 1.0,
                                                double alpha2 = -1.0);

}  // namespace fzddn

#pragma once

#include <span>
#include <vector>

#include "fzddn/core/types.hpp"

namespace fzddn {

/// d x d matrix with a single unit entry at (i mod d, j mod d).
CMatrix elementary(int d, int i, int j);

/// Kronecker product with the row-major block convention
/// (A (x) B)[i*rB + k, j*cB + l] = A[i,j] B[k,l].
CMatrix kron(const CMatrix& a, const CMatrix& b);
CMatrix kron(std::span<const CMatrix> factors);

/// Swap operator on C^n (x) C^n.
CMatrix permutation_op(int n);

/// Dense embedding of `op` into a tensor product with factor dimensions
/// `dims`. `op` acts on the factors listed in `sites` (1-based, in that
/// order); identity elsewhere. Sites need not be adjacent or ascending.
CMatrix embed(const CMatrix& op, std::span<const int> sites, std::span<const int> dims);

/// out += scale * embed(op, sites, dims), without forming the embedded operator.
void embed_accumulate(CMatrix& out, const CMatrix& op, std::span<const int> sites, std::span<const int> dims,
                      cplx scale = 1.0);

/// Two-site specialization on a homogeneous chain of L sites of dimension n.
/// Wrapped and reversed pairs such as (L, 1) are allowed.
CMatrix embed_two_site(const CMatrix& op, int i, int j, int n, int L);

/// Single-site embedding on a homogeneous chain.
CMatrix embed_one_site(const CMatrix& op, int i, int n, int L);

/// tr_0 of an operator on C^{first_dim} (x) C^{rest}.
CMatrix partial_trace_first(const CMatrix& m, int first_dim);

CMatrix identity(int dim);

// ---- residual measures ------------------------------------------------------

/// ||a - b||_F / ||a||_F (falls back to absolute when a vanishes).
double relative_difference(const CMatrix& a, const CMatrix& b);

/// ||lhs - rhs||_F / max(||lhs||_F, 1).
double bounded_residual(const CMatrix& lhs, const CMatrix& rhs);

/// ||ab - ba||_F / (||a||_F ||b||_F).
double commutator_residual(const CMatrix& a, const CMatrix& b);

/// Distance of m from the nearest multiple of the identity, relative to ||m||,
/// together with that multiple.
struct ScalarFit {
  cplx scale;
  double residual;
};
ScalarFit fit_identity_multiple(const CMatrix& m);

/// Best c with a ~ c b, and the relative remainder ||a - c b|| / ||a||.
ScalarFit fit_proportional(const CMatrix& a, const CMatrix& b);

}  // namespace fzddn

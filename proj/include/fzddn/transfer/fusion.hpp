#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fzddn/transfer/transfer.hpp"

namespace fzddn {

/// (V, U): columns v+_k then v-_k, and u+_k then u-_k. Column j (1-based)
/// within each half holds the vector with label k = j - (n-1)/2, which is the
/// order that makes L(iz) R(z) block lower triangular.
std::pair<CMatrix, CMatrix> fusion_vectors(const RootContext& ctx);

struct BlockTriangularReport {
  double upper_right = 0.0;   // ||upper-right n^2 block||
  double top_left = 0.0;      // residual against (w^-2 z1 + 1) R(w^-2 z1, z2)
  double bottom_right = 0.0;  // residual against (z1 - 1) R(w^2 z1, z2)
  CMatrix lower_left;         // unconstrained block, kept for inspection
};

BlockTriangularReport block_triangular_check(const NormalizedRMatrix& r, const SpectralPoint& p);

// Residuals ||LHS - RHS|| / max(||LHS||, 1) of the Yang-Baxter-like relations
// between r, L, L* and R.
double relation_rll(const RootContext& ctx, cplx x, cplx y);
double relation_limit_rll(const RootContext& ctx, cplx x, cplx y);
double relation_llr(const RootContext& ctx, cplx x1, cplx y1, cplx y2);
double relation_conj_llr(const RootContext& ctx, cplx x2, cplx y1, cplx y2);

struct FusionReport {
  std::string relation;
  std::vector<SpectralPoint> points;
  std::vector<double> residuals;
  std::vector<bool> pass;
  double tol = 1e-7;

  bool all_pass() const;
  double max_residual() const;
};

/// Coefficients (A, B) of the functional relation
///   t2(s) t3(p) = A t3(p_A) + B t3(p_B),
/// with s = i z1 (first family) or -i z2 (second family).
struct FunctionalRelation {
  cplx aux_argument;
  cplx coeff_a;
  SpectralPoint point_a;
  cplx coeff_b;
  SpectralPoint point_b;
};
FunctionalRelation functional_relation(const ChainSpec& spec, const SpectralPoint& p, AuxFamily family);

/// False where a coefficient of the relation has a pole (open chains) or the
/// point is otherwise unsuitable.
bool fusion_point_admissible(const ChainSpec& spec, const SpectralPoint& p, AuxFamily family);

double fusion_residual(const ChainSpec& spec, const NormalizedRMatrix& r, const SpectralPoint& p, AuxFamily family);

/// Residuals at every point, evaluated in parallel.
FusionReport fusion_sweep(const ChainSpec& spec, const std::vector<SpectralPoint>& points, AuxFamily family,
                          double tol = 1e-7);

}  // namespace fzddn

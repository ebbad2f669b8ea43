#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "fzddn/core/types.hpp"

namespace fzddn {

struct HermitianEigen {
  Eigen::VectorXd values;  // ascending
  CMatrix vectors;         // unitary, columns match values
};

/// Full spectrum of a self-adjoint matrix. Throws precondition-violation when
/// ||A - A^dagger|| exceeds 1e-10 ||A||.
HermitianEigen eig_hermitian(const CMatrix& a);

double hermiticity_defect(const CMatrix& a);

/// Contiguous run of basis columns that no family member separates.
struct Cluster {
  int begin;
  int size;
};

struct SimultaneousBasis {
  CMatrix vectors;                // unitary; columns are common eigenvectors
  std::vector<Cluster> clusters;  // after refinement, in column order
  double max_offdiag_residual;    // max_k ||offdiag(V^dagger A_k V)|| / ||A_k||

  bool resolved(double tol = 1e-7) const { return max_offdiag_residual <= tol; }
};

/// Common unitary eigenbasis of a commuting family of normal matrices.
/// The Hermitian parts (A + A^dagger)/2 and (A - A^dagger)/2i of every member
/// are combined with seeded random real weights and diagonalized; eigenvalue
/// clusters closer than 1e-7 are then re-diagonalized against each member in
/// turn. Throws precondition-violation if some pair fails
/// ||[A, B]|| <= 1e-8 ||A|| ||B||.
SimultaneousBasis simultaneous_eigenbasis(std::span<const CMatrix> family, std::uint64_t seed = 0);

}  // namespace fzddn

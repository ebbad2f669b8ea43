#pragma once

#include <span>

#include "fzddn/chain/spec.hpp"
#include "fzddn/core/spectral_point.hpp"
#include "fzddn/fz/rmatrix.hpp"

namespace fzddn {

/// One factor of an auxiliary-space product. The operator acts on the pair
/// (aux, site) when aux_first, else on (site, aux); site == 0 means the
/// operator acts on the auxiliary space alone.
struct AuxFactor {
  const CMatrix* op;
  int site;
  bool aux_first = true;
};

/// tr_0[F_1 F_2 ... F_m] on C^{aux} (x) (C^n)^{(x) L}, evaluated slab by slab
/// so that no (aux n^L)^2 operator is ever formed.
CMatrix aux_trace_product(std::span<const AuxFactor> factors, int aux_dim, int n, int L);

/// The n-dimensional auxiliary transfer matrix of the chain's boundary class,
/// built from the normalized R-matrix.
CMatrix transfer_t3(const ChainSpec& spec, const NormalizedRMatrix& r, const SpectralPoint& p);
CMatrix transfer_t3(const ChainSpec& spec, const SpectralPoint& p);

/// Two-dimensional auxiliary family. First: L (with L' or Lbar(z01) for open
/// and braided chains). Second: the conjugate chain L* (with L'* or
/// conj Lbar(z02)). Twisted chains throw not-applicable.
enum class AuxFamily { first, second };
CMatrix transfer_t2(const ChainSpec& spec, cplx z, AuxFamily family = AuxFamily::first);

}  // namespace fzddn

#pragma once

#include "fzddn/core/types.hpp"

namespace fzddn {

/// Multiplicative spectral parameter (z1, z2); the group law is componentwise.
struct SpectralPoint {
  cplx z1{1.0};
  cplx z2{1.0};

  static SpectralPoint one() { return {}; }
  SpectralPoint inverse() const { return {1.0 / z1, 1.0 / z2}; }
  SpectralPoint conjugate_swap() const { return {std::conj(z2), std::conj(z1)}; }

  friend SpectralPoint operator*(const SpectralPoint& a, const SpectralPoint& b) {
    return {a.z1 * b.z1, a.z2 * b.z2};
  }
};

}  // namespace fzddn

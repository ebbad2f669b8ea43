#pragma once

#include <complex>

#include <Eigen/Dense>

namespace fzddn {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr cplx kI{0.0, 1.0};

// Indices follow the 1-based modular convention: i and i + d name the same
// basis vector, and the canonical representative lies in {1, ..., d}.
inline int canonical_index(int i, int d) {
  const int r = ((i - 1) % d + d) % d;
  return r + 1;
}

// 0-based storage position of the modular index i.
inline int position(int i, int d) { return canonical_index(i, d) - 1; }

struct ModIndex {
  int value;
  int modulus;

  int canonical() const { return canonical_index(value, modulus); }
  int position() const { return fzddn::position(value, modulus); }

  friend bool operator==(const ModIndex& a, const ModIndex& b) {
    return a.modulus == b.modulus && a.canonical() == b.canonical();
  }
};

}  // namespace fzddn

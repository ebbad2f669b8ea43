#pragma once

#include <vector>

#include <Eigen/Sparse>

#include "fzddn/dihedral/dihedral.hpp"

namespace fzddn {

/// Element sum_{g,h} c_{g,h} g h* of D(D_n), stored densely over the 4n^2
/// basis pairs at index g.index() * 2n + h.index().
class DoubleElement {
 public:
  explicit DoubleElement(int n);

  static DoubleElement basis(const DihedralElement& g, const DihedralElement& h);
  /// g embedded as sum_h g h*, which is grouplike.
  static DoubleElement group(const DihedralElement& g);
  /// e h*.
  static DoubleElement dual(const DihedralElement& h);
  static DoubleElement unit(int n) { return group(DihedralElement::identity(n)); }

  int n() const { return n_; }
  int size() const { return 4 * n_ * n_; }
  cplx& operator[](int index) { return coeffs_[index]; }
  cplx operator[](int index) const { return coeffs_[index]; }
  cplx coefficient(const DihedralElement& g, const DihedralElement& h) const;
  const CVector& coefficients() const { return coeffs_; }
  static DoubleElement from_coefficients(int n, const CVector& c);

  DoubleElement operator+(const DoubleElement& o) const;
  DoubleElement operator*(cplx s) const;
  /// g1 h1* g2 h2* = delta(h1 g2, g2 h2) (g1 g2) h2*.
  DoubleElement operator*(const DoubleElement& o) const;

 private:
  int n_;
  CVector coeffs_;
};

/// pi(x) on C^n.
CMatrix represent(const RootContext& ctx, const DoubleElement& x);

using SparseCMatrix = Eigen::SparseMatrix<cplx>;

/// pi^{(x) l}(Delta^{(l)}(x)), with Delta^{(l)} = (Delta (x) id^{l-2}) Delta^{(l-1)}.
CMatrix coproduct_power(const RootContext& ctx, const DoubleElement& x, int l);
SparseCMatrix coproduct_power_sparse(const RootContext& ctx, const DoubleElement& x, int l);

/// Same map with the other bracketing, Delta^{(l)} = (id^{l-2} (x) Delta) Delta^{(l-1)}.
/// Kept as an independent route for coassociativity checks.
CMatrix coproduct_power_right(const RootContext& ctx, const DoubleElement& x, int l);

/// (pi (x) pi)(sum_g g (x) g*).
CMatrix canonical_R(const RootContext& ctx);

/// Delta(x) as coefficients over pairs of basis pairs; index a * 4n^2 + b.
CVector coproduct_coefficients(const DoubleElement& x);

/// Basis of {a : Delta(a) = Delta^T(a)}, from the kernel of Delta - T Delta.
std::vector<DoubleElement> cocommutative_subspace(const RootContext& ctx);

}  // namespace fzddn

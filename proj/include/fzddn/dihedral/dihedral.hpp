#pragma once

#include <string>
#include <vector>

#include "fzddn/core/types.hpp"

namespace fzddn {

/// Arithmetic ground for odd n >= 3: w = exp(2 pi i / n) and the primitive
/// 2n-th root lambda = -w^{-2} used by the weights.
class RootContext {
 public:
  explicit RootContext(int n);

  int n() const { return n_; }
  int half() const { return (n_ - 1) / 2; }
  cplx w() const { return w_; }
  cplx lambda() const { return lambda_; }
  /// w^k for any integer k, reduced exactly mod n.
  cplx w_pow(long k) const;
  /// lambda^k for any integer k, reduced exactly mod 2n.
  cplx lambda_pow(long k) const;

 private:
  int n_;
  cplx w_;
  cplx lambda_;
  std::vector<cplx> w_table_;
  std::vector<cplx> lambda_table_;
};

/// sigma^k tau^s in D_n. Acts on Z_n by x -> (-1)^s x + k.
struct DihedralElement {
  int n = 3;
  int k = 0;
  int s = 0;

  static DihedralElement identity(int n) { return {n, 0, 0}; }
  static DihedralElement sigma(int n) { return {n, 1, 0}; }
  static DihedralElement tau(int n) { return {n, 0, 1}; }

  DihedralElement normalized() const;
  bool is_reflection() const { return s == 1; }
  int act(int x) const;
  /// Dense index in [0, 2n): s * n + k.
  int index() const { return s * n + normalized().k; }
  std::string label() const;

  friend bool operator==(const DihedralElement& a, const DihedralElement& b) {
    const auto x = a.normalized();
    const auto y = b.normalized();
    return x.n == y.n && x.k == y.k && x.s == y.s;
  }
};

DihedralElement group_compose(const DihedralElement& a, const DihedralElement& b);
DihedralElement group_inverse(const DihedralElement& a);
DihedralElement group_power(const DihedralElement& a, int p);
std::vector<DihedralElement> dihedral_elements(int n);
DihedralElement element_from_index(int n, int index);
/// {g a g^-1 : g in D_n}, sorted by index, duplicates removed.
std::vector<DihedralElement> conjugacy_class(const DihedralElement& a);

/// Parses "s^k t^s" (either factor optional, "e" for the identity).
DihedralElement parse_dihedral(const std::string& text, int n);

/// pi(g) = sum_i e_{g(i), i}.
CMatrix rep_g(const RootContext& ctx, const DihedralElement& g);
/// pi(g*) = sum_j delta(g, sigma^{2j} tau) e_{j,j}.
CMatrix rep_gstar(const RootContext& ctx, const DihedralElement& g);

}  // namespace fzddn

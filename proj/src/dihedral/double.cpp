#include "fzddn/dihedral/double.hpp"

#include <functional>

#include <Eigen/LU>

#include "fzddn/core/error.hpp"
#include "fzddn/core/tensor.hpp"

namespace fzddn {
namespace {

int pair_index(const DihedralElement& g, const DihedralElement& h) {
  return g.index() * 2 * g.n + h.index();
}

// Diagonal position j (0-based storage) selected by pi(k*), or -1 for rotations.
int dual_slot(const DihedralElement& k) {
  const auto x = k.normalized();
  if (!x.is_reflection()) return -1;
  const int j = static_cast<int>((static_cast<long>(x.k) * ((x.n + 1) / 2)) % x.n);
  return position(j, x.n);
}

// Storage position of g applied to the basis vector at storage position p.
int act_position(const DihedralElement& g, int p) { return position(g.act(p + 1), g.n); }

struct Entry {
  long row;
  long col;
};

// Unit entries of pi^{(x) l}(Delta^{(l)}(g h*)) under left bracketing.
// Delta^{(l)}(g h*) = sum_k Delta^{(l-1)}(g (k^-1 h)*) (x) g k*.
void left_entries(const DihedralElement& g, const DihedralElement& h, int l, long row, long col,
                  std::vector<Entry>& out, long stride) {
  if (l == 1) {
    const int j = dual_slot(h);
    if (j < 0) return;
    out.push_back({row + act_position(g, j) * stride, col + j * stride});
    return;
  }
  const int n = g.n;
  for (int j = 0; j < n; ++j) {
    // k is the unique reflection with slot j: k = sigma^{2 j'} tau for value j' = j + 1
    const DihedralElement k{n, 2 * (j + 1), 1};
    const auto rest = group_compose(group_inverse(k), h);
    if (l - 1 == 1 && !rest.normalized().is_reflection()) continue;
    left_entries(g, rest, l - 1, row + act_position(g, j) * stride, col + j * stride, out, stride * n);
  }
}

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

void require_context(const RootContext& ctx, const DoubleElement& x) {
  if (ctx.n() != x.n()) throw Error(ErrorKind::invalid_context, "element order does not match context");
}

}  // namespace

DoubleElement::DoubleElement(int n) : n_(n), coeffs_(CVector::Zero(4 * n * n)) {}

DoubleElement DoubleElement::basis(const DihedralElement& g, const DihedralElement& h) {
  if (g.n != h.n) throw Error(ErrorKind::invalid_context, "dihedral elements of different order");
  DoubleElement x(g.n);
  x[pair_index(g, h)] = 1.0;
  return x;
}

DoubleElement DoubleElement::group(const DihedralElement& g) {
  DoubleElement x(g.n);
  for (const auto& h : dihedral_elements(g.n)) x[pair_index(g, h)] = 1.0;
  return x;
}

DoubleElement DoubleElement::dual(const DihedralElement& h) {
  return basis(DihedralElement::identity(h.n), h);
}

cplx DoubleElement::coefficient(const DihedralElement& g, const DihedralElement& h) const {
  return coeffs_[pair_index(g, h)];
}

DoubleElement DoubleElement::from_coefficients(int n, const CVector& c) {
  DoubleElement x(n);
  if (c.size() != x.size()) throw Error(ErrorKind::invalid_dimension, "coefficient vector has wrong length");
  x.coeffs_ = c;
  return x;
}

DoubleElement DoubleElement::operator+(const DoubleElement& o) const {
  if (n_ != o.n_) throw Error(ErrorKind::invalid_context, "double elements of different order");
  DoubleElement r(n_);
  r.coeffs_ = coeffs_ + o.coeffs_;
  return r;
}

DoubleElement DoubleElement::operator*(cplx s) const {
  DoubleElement r(n_);
  r.coeffs_ = coeffs_ * s;
  return r;
}

DoubleElement DoubleElement::operator*(const DoubleElement& o) const {
  if (n_ != o.n_) throw Error(ErrorKind::invalid_context, "double elements of different order");
  const int m = 2 * n_;
  DoubleElement r(n_);
  for (int a = 0; a < size(); ++a) {
    if (coeffs_[a] == cplx{}) continue;
    const auto g1 = element_from_index(n_, a / m);
    const auto h1 = element_from_index(n_, a % m);
    for (int b = 0; b < size(); ++b) {
      if (o.coeffs_[b] == cplx{}) continue;
      const auto g2 = element_from_index(n_, b / m);
      const auto h2 = element_from_index(n_, b % m);
      if (!(group_compose(h1, g2) == group_compose(g2, h2))) continue;
      r[pair_index(group_compose(g1, g2), h2)] += coeffs_[a] * o.coeffs_[b];
    }
  }
  return r;
}

CMatrix represent(const RootContext& ctx, const DoubleElement& x) {
  return coproduct_power(ctx, x, 1);
}

SparseCMatrix coproduct_power_sparse(const RootContext& ctx, const DoubleElement& x, int l) {
  require_context(ctx, x);
  if (l < 1) throw Error(ErrorKind::invalid_dimension, "coproduct power must be >= 1");
  const int n = ctx.n();
  const int m = 2 * n;
  const long dim = ipow(n, l);
  std::vector<Eigen::Triplet<cplx>> triplets;
  for (int a = 0; a < x.size(); ++a) {
    if (x[a] == cplx{}) continue;
    std::vector<Entry> entries;
    // The last tensor factor varies fastest and the recursion peels it first.
    left_entries(element_from_index(n, a / m), element_from_index(n, a % m), l, 0, 0, entries, 1);
    for (const auto& e : entries) triplets.emplace_back(e.row, e.col, x[a]);
  }
  SparseCMatrix out(dim, dim);
  out.setFromTriplets(triplets.begin(), triplets.end());
  return out;
}

CMatrix coproduct_power(const RootContext& ctx, const DoubleElement& x, int l) {
  return CMatrix(coproduct_power_sparse(ctx, x, l));
}

CMatrix coproduct_power_right(const RootContext& ctx, const DoubleElement& x, int l) {
  require_context(ctx, x);
  if (l < 1) throw Error(ErrorKind::invalid_dimension, "coproduct power must be >= 1");
  // For the right bracketing, Delta^{(l)}(g h*) = sum_k g (k^-1 h)* (x) Delta^{(l-1)}(g k*);
  // expand by explicit recursion on matrices.
  const int n = ctx.n();
  const int m = 2 * n;
  std::function<CMatrix(const DihedralElement&, const DihedralElement&, int)> rec =
      [&](const DihedralElement& g, const DihedralElement& h, int level) -> CMatrix {
    if (level == 1) return rep_g(ctx, g) * rep_gstar(ctx, h);
    CMatrix acc = CMatrix::Zero(ipow(n, level), ipow(n, level));
    for (const auto& k : dihedral_elements(n)) {
      const CMatrix first = rep_g(ctx, g) * rep_gstar(ctx, group_compose(group_inverse(k), h));
      if (first.isZero()) continue;
      acc += kron(first, rec(g, k, level - 1));
    }
    return acc;
  };
  CMatrix out = CMatrix::Zero(ipow(n, l), ipow(n, l));
  for (int a = 0; a < x.size(); ++a)
    if (x[a] != cplx{}) out += x[a] * rec(element_from_index(n, a / m), element_from_index(n, a % m), l);
  return out;
}

CMatrix canonical_R(const RootContext& ctx) {
  const int n = ctx.n();
  CMatrix r = CMatrix::Zero(n * n, n * n);
  for (const auto& g : dihedral_elements(n)) r += kron(rep_g(ctx, g), rep_gstar(ctx, g));
  return r;
}

CVector coproduct_coefficients(const DoubleElement& x) {
  const int n = x.n();
  const int m = 2 * n;
  const int s = x.size();
  CVector out = CVector::Zero(static_cast<long>(s) * s);
  for (int a = 0; a < s; ++a) {
    if (x[a] == cplx{}) continue;
    const auto g = element_from_index(n, a / m);
    const auto h = element_from_index(n, a % m);
    for (const auto& k : dihedral_elements(n)) {
      const int left = pair_index(g, group_compose(group_inverse(k), h));
      const int right = pair_index(g, k);
      out[static_cast<long>(left) * s + right] += x[a];
    }
  }
  return out;
}

std::vector<DoubleElement> cocommutative_subspace(const RootContext& ctx) {
  const int n = ctx.n();
  const int s = 4 * n * n;
  // Column a holds (Delta - T Delta)(basis_a).
  CMatrix system = CMatrix::Zero(static_cast<long>(s) * s, s);
  for (int a = 0; a < s; ++a) {
    DoubleElement b(n);
    b[a] = 1.0;
    const CVector d = coproduct_coefficients(b);
    for (long p = 0; p < d.size(); ++p) {
      if (d[p] == cplx{}) continue;
      const long left = p / s;
      const long right = p % s;
      system(p, a) += d[p];
      system(right * s + left, a) -= d[p];
    }
  }
  Eigen::FullPivLU<CMatrix> lu(system);
  lu.setThreshold(1e-10);
  const CMatrix kernel = lu.kernel();
  std::vector<DoubleElement> out;
  if (lu.rank() == s) return out;
  for (long c = 0; c < kernel.cols(); ++c) out.push_back(DoubleElement::from_coefficients(n, kernel.col(c)));
  return out;
}

}  // namespace fzddn

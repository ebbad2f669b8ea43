#include "fzddn/chain/hamiltonian.hpp"

#include <algorithm>
#include <vector>

#include "fzddn/core/error.hpp"
#include "fzddn/core/linalg.hpp"
#include "fzddn/core/tensor.hpp"
#include "fzddn/kernels/two_site.hpp"

namespace fzddn {
namespace {

void add_pair(CMatrix& m, int n, int r1, int c1, int r2, int c2, cplx v) {
  m(static_cast<long>(position(r1, n)) * n + position(r2, n), static_cast<long>(position(c1, n)) * n + position(c2, n)) += v;
}

void add_two_site(CMatrix& target, const CMatrix& op, int i, int j, int n, int L) {
  const std::vector<int> dims(L, n);
  const int sites[] = {i, j};
  embed_accumulate(target, op, sites, dims);
}

// x <- G x and x <- G^-dagger x for G = b_1 ... b_{L-1}.
void apply_braid_product(const CMatrix& b, int n, int L, CMatrix& x) {
  const std::vector<int> dims(L, n);
  for (int i = L - 1; i >= 1; --i) kernels::apply_two_site(b, i, i + 1, dims, x);
}

void apply_braid_product_inverse_adjoint(const CMatrix& b_inv, int n, int L, CMatrix& x) {
  const std::vector<int> dims(L, n);
  const CMatrix b_inv_adj = b_inv.adjoint();
  for (int i = L - 1; i >= 1; --i) kernels::apply_two_site(b_inv_adj, i, i + 1, dims, x);
}

}  // namespace

CMatrix h_component(const RootContext& ctx, int which) {
  if (which != 1 && which != 2) throw Error(ErrorKind::invalid_spec, "Hamiltonian component must be 1 or 2");
  const int n = ctx.n();
  CMatrix h = CMatrix::Zero(n * n, n * n);
  const long sign = which == 1 ? -1 : 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int l = 1; l < n; ++l) {
        const double parity = (l % 2 == 0) ? 1.0 : -1.0;
        const cplx v = parity * ctx.w_pow(sign * 2L * l * (i - j)) / (ctx.w_pow(2L * l) - ctx.w_pow(-2L * l));
        add_pair(h, n, i + l, i, j + l, j, kI * v);
      }
  return h;
}

CMatrix local_h(const RootContext& ctx, double alpha1, double alpha2) {
  return alpha1 * h_component(ctx, 1) + alpha2 * h_component(ctx, 2);
}

CMatrix local_h_dihedral_sum(const RootContext& ctx, double alpha1, double alpha2) {
  const int n = ctx.n();
  CMatrix h = CMatrix::Zero(n * n, n * n);
  const auto group = dihedral_elements(n);
  for (int a = 1; a <= ctx.half(); ++a)
    for (int b = 0; b < n; ++b) {
      const double parity = (a % 2 == 0) ? 1.0 : -1.0;
      const cplx coef = parity * (alpha1 * ctx.w_pow(2L * a * b) + alpha2 * ctx.w_pow(-2L * a * b)) /
                        (ctx.w_pow(2L * a) - ctx.w_pow(-2L * a));
      for (const auto& g : group) add_pair(h, n, g.act(a - b), g.act(n - b), g.act(a), g.act(n), kI * coef);
    }
  return h;
}

CMatrix twisted_local_h(const RootContext& ctx, const DihedralElement& g, double alpha1, double alpha2) {
  const CMatrix pg = rep_g(ctx, g);
  const CMatrix id = identity(ctx.n());
  // pi(g) is a permutation matrix, so its inverse is its transpose.
  return kron(pg.transpose(), id) * local_h(ctx, alpha1, alpha2) * kron(pg, id);
}

CMatrix braid_b(const NormalizedRMatrix& r, const BraidPoint& z0) {
  return permutation_op(r.context().n()) * r.corner(z0.z1_infinite, z0.z2_infinite);
}

CMatrix braid_b(const RootContext& ctx, const BraidPoint& z0) { return braid_b(NormalizedRMatrix(ctx), z0); }

CMatrix braid_b_displayed(const RootContext& ctx, const BraidPoint& z0) {
  const int n = ctx.n();
  CMatrix b = CMatrix::Zero(n * n, n * n);
  if (!z0.z1_infinite && !z0.z2_infinite) {
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) add_pair(b, n, i, i + j, i - j, i, 1.0);
    return b;
  }
  if (!z0.z1_infinite && z0.z2_infinite) {
    for (int a = 1; a <= n; ++a)
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
          for (int k = 1; k <= n; ++k) {
            const long e = 4L * k * (j - a - k) + 2L * j * (a - j);
            add_pair(b, n, i + a + j, i + a, i + j, i, ctx.w_pow(e));
          }
    return b;
  }
  throw Error(ErrorKind::not_applicable, "no closed form recorded for braid point " + z0.label());
}

CMatrix braid_product(const CMatrix& b, int n, int L) {
  long dim = 1;
  for (int i = 0; i < L; ++i) dim *= n;
  CMatrix g = CMatrix::Identity(dim, dim);
  apply_braid_product(b, n, L, g);
  return g;
}

CMatrix global_hamiltonian(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n();
  const int L = spec.sites;
  const long dim = spec.dimension();
  const CMatrix h = local_h(spec.ctx, spec.alpha1, spec.alpha2);
  CMatrix H = CMatrix::Zero(dim, dim);
  for (int i = 1; i < L; ++i) add_two_site(H, h, i, i + 1, n, L);

  switch (spec.boundary) {
    case BoundaryKind::periodic:
    case BoundaryKind::twisted:
      add_two_site(H, twisted_local_h(spec.ctx, spec.effective_twist(), spec.alpha1, spec.alpha2), L, 1, n, L);
      break;
    case BoundaryKind::open:
      break;
    case BoundaryKind::braided: {
      const CMatrix b = braid_b(spec.ctx, spec.braid);
      const CMatrix b_inv = b.inverse();
      CMatrix x = CMatrix::Zero(dim, dim);
      add_two_site(x, h, L - 1, L, n, L);
      apply_braid_product(b, n, L, x);  // G H
      CMatrix y = x.adjoint();
      apply_braid_product_inverse_adjoint(b_inv, n, L, y);  // G^-dagger (G H)^dagger
      H += y.adjoint();
      break;
    }
  }
  return H;
}

CMatrix translation_op(const ChainSpec& spec) {
  spec.validate();
  const int n = spec.n();
  const int L = spec.sites;
  const std::vector<int> dims(L, n);
  const CMatrix p = permutation_op(n);
  CMatrix t = identity(static_cast<int>(spec.dimension()));
  switch (spec.boundary) {
    case BoundaryKind::periodic:
      for (int j = 2; j <= L; ++j) kernels::apply_two_site(p, 1, j, dims, t);
      return t;
    case BoundaryKind::twisted:
      for (int i = L - 1; i >= 1; --i) kernels::apply_two_site(p, i, i + 1, dims, t);
      kernels::apply_one_site(rep_g(spec.ctx, spec.effective_twist()), 1, dims, t);
      return t;
    case BoundaryKind::braided:
      apply_braid_product(braid_b(spec.ctx, spec.braid), n, L, t);
      return t;
    case BoundaryKind::open:
      break;
  }
  throw Error(ErrorKind::not_applicable, "open chains have a scalar t(1)");
}

CMatrix braided_closure_factor(const NormalizedRMatrix& r, const BraidPoint& z0) {
  const int n = r.context().n();
  const CMatrix p = permutation_op(n);
  // Rbar_{0L} is the limit of R_{L0} = P R_{0L} P.
  const CMatrix rbar = p * r.corner(z0.z1_infinite, z0.z2_infinite) * p;
  return partial_trace_first(p * rbar, n);
}

ConjugacyComparison conjugacy_equivalence_check(const RootContext& ctx, int L, const DihedralElement& g,
                                                const DihedralElement& h, double alpha1, double alpha2) {
  ConjugacyComparison out;
  const auto cls = conjugacy_class(g);
  out.same_class = std::find(cls.begin(), cls.end(), h) != cls.end();
  auto spectrum = [&](const DihedralElement& t) {
    ChainSpec spec(ctx, L, BoundaryKind::twisted);
    spec.twist = t;
    spec.alpha1 = alpha1;
    spec.alpha2 = alpha2;
    return eig_hermitian(global_hamiltonian(spec)).values;
  };
  const Eigen::VectorXd a = spectrum(g);
  const Eigen::VectorXd b = spectrum(h);
  out.max_abs_difference = (a - b).cwiseAbs().maxCoeff();
  out.equivalent = out.max_abs_difference < 1e-8;
  return out;
}

}  // namespace fzddn

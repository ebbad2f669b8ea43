#include "fzddn/transfer/transfer.hpp"

#include <vector>

#include "fzddn/core/error.hpp"
#include "fzddn/dihedral/dihedral.hpp"
#include "fzddn/kernels/two_site.hpp"
#include "fzddn/transfer/lax.hpp"

namespace fzddn {

CMatrix aux_trace_product(std::span<const AuxFactor> factors, int aux_dim, int n, int L) {
  std::vector<int> dims(L + 1, n);
  dims[0] = aux_dim;
  long q = 1;
  for (int i = 0; i < L; ++i) q *= n;
  CMatrix out = CMatrix::Zero(q, q);
  for (int alpha = 0; alpha < aux_dim; ++alpha) {
    // columns of (e_alpha (x) I), pushed through the product from the right
    CMatrix x = CMatrix::Zero(aux_dim * q, q);
    x.block(alpha * q, 0, q, q).setIdentity();
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
      if (it->site == 0)
        kernels::apply_one_site(*it->op, 1, dims, x);
      else if (it->aux_first)
        kernels::apply_two_site(*it->op, 1, it->site + 1, dims, x);
      else
        kernels::apply_two_site(*it->op, it->site + 1, 1, dims, x);
    }
    out += x.block(alpha * q, 0, q, q);
  }
  return out;
}

CMatrix transfer_t3(const ChainSpec& spec, const NormalizedRMatrix& r, const SpectralPoint& p) {
  spec.validate();
  const int n = spec.n();
  const int L = spec.sites;
  if (r.context().n() != n) throw Error(ErrorKind::invalid_context, "R-matrix order does not match the chain");
  const CMatrix rp = r(p);
  std::vector<AuxFactor> f;
  CMatrix k;
  CMatrix rbar;
  switch (spec.boundary) {
    case BoundaryKind::periodic:
    case BoundaryKind::twisted:
      k = rep_g(spec.ctx, spec.effective_twist());
      f.push_back({&k, 0});
      for (int i = L; i >= 1; --i) f.push_back({&rp, i});
      break;
    case BoundaryKind::open:
      for (int i = L; i >= 1; --i) f.push_back({&rp, i});
      for (int i = 1; i <= L; ++i) f.push_back({&rp, i, false});
      break;
    case BoundaryKind::braided:
      // Rbar_{0i} is the limit of R_{i0}: the corner coefficient placed on (i, 0).
      rbar = r.corner(spec.braid.z1_infinite, spec.braid.z2_infinite);
      for (int i = L; i >= 1; --i) f.push_back({&rp, i});
      for (int i = 1; i <= L; ++i) f.push_back({&rbar, i, false});
      break;
  }
  return aux_trace_product(f, n, n, L);
}

CMatrix transfer_t3(const ChainSpec& spec, const SpectralPoint& p) {
  return transfer_t3(spec, NormalizedRMatrix(spec.ctx), p);
}

CMatrix transfer_t2(const ChainSpec& spec, cplx z, AuxFamily family) {
  spec.validate();
  const int L = spec.sites;
  const RootContext& ctx = spec.ctx;
  const bool second = family == AuxFamily::second;
  const CMatrix l = second ? l_op_conj(ctx, z) : l_op(ctx, z);
  CMatrix tail;
  switch (spec.boundary) {
    case BoundaryKind::periodic:
      break;
    case BoundaryKind::open:
      tail = second ? l_op_prime_conj(ctx, z) : l_op_prime(ctx, z);
      break;
    case BoundaryKind::braided:
      tail = second ? CMatrix(l_bar(ctx, spec.braid.z2_infinite).conjugate()) : l_bar(ctx, spec.braid.z1_infinite);
      break;
    case BoundaryKind::twisted:
      throw Error(ErrorKind::not_applicable, "no two-dimensional auxiliary family for twisted chains");
  }
  std::vector<AuxFactor> f;
  for (int i = L; i >= 1; --i) f.push_back({&l, i});
  if (tail.size() > 0)
    for (int i = 1; i <= L; ++i) f.push_back({&tail, i});
  return aux_trace_product(f, 2, spec.n(), L);
}

}  // namespace fzddn

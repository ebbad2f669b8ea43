#include "fzddn/core/tensor.hpp"

#include <algorithm>
#include <numeric>

#include <unsupported/Eigen/KroneckerProduct>

#include "fzddn/core/error.hpp"

namespace fzddn {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_dimension: return "invalid-dimension";
    case ErrorKind::invalid_sites: return "invalid-sites";
    case ErrorKind::invalid_context: return "invalid-context";
    case ErrorKind::invalid_pair: return "invalid-pair";
    case ErrorKind::invalid_point: return "invalid-point";
    case ErrorKind::invalid_spec: return "invalid-spec";
    case ErrorKind::precondition_violation: return "precondition-violation";
    case ErrorKind::insufficient_samples: return "insufficient-samples";
    case ErrorKind::singular_parameter: return "singular-parameter";
    case ErrorKind::singular_roots: return "singular-roots";
    case ErrorKind::not_applicable: return "not-applicable";
    case ErrorKind::resource_limit: return "resource-limit";
  }
  return "unknown";
}

CMatrix elementary(int d, int i, int j) {
  if (d <= 0) throw Error(ErrorKind::invalid_dimension, "elementary matrix needs d >= 1");
  CMatrix m = CMatrix::Zero(d, d);
  m(position(i, d), position(j, d)) = 1.0;
  return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

CMatrix kron(std::span<const CMatrix> factors) {
  CMatrix out = CMatrix::Identity(1, 1);
  for (const auto& f : factors) out = kron(out, f);
  return out;
}

CMatrix permutation_op(int n) {
  if (n <= 0) throw Error(ErrorKind::invalid_dimension, "permutation_op needs n >= 1");
  CMatrix p = CMatrix::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p(i * n + j, j * n + i) = 1.0;
  return p;
}

CMatrix identity(int dim) { return CMatrix::Identity(dim, dim); }

void embed_accumulate(CMatrix& out, const CMatrix& op, std::span<const int> sites, std::span<const int> dims,
                      cplx scale) {
  const int count = static_cast<int>(dims.size());
  const int k = static_cast<int>(sites.size());
  std::vector<long> stride(count, 1);
  for (int s = count - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];
  const long total = count == 0 ? 1 : stride[0] * dims[0];

  long local = 1;
  for (int a = 0; a < k; ++a) {
    const int s = sites[a];
    if (s < 1 || s > count) throw Error(ErrorKind::invalid_sites, "site index out of range");
    for (int b = 0; b < a; ++b)
      if (sites[b] == s) throw Error(ErrorKind::invalid_sites, "repeated site");
    local *= dims[s - 1];
  }
  if (op.rows() != local || op.cols() != local)
    throw Error(ErrorKind::invalid_dimension, "operator does not match the local dimensions");

  // local multi-index -> global offset for the listed sites
  std::vector<long> offset(local, 0);
  for (long idx = 0; idx < local; ++idx) {
    long rem = idx;
    long off = 0;
    for (int a = k - 1; a >= 0; --a) {
      const int d = dims[sites[a] - 1];
      off += (rem % d) * stride[sites[a] - 1];
      rem /= d;
    }
    offset[idx] = off;
  }

  if (out.rows() != total || out.cols() != total)
    throw Error(ErrorKind::invalid_dimension, "target does not match the tensor dimensions");
  for (long base = 0; base < total; ++base) {
    bool is_base = true;
    for (int a = 0; a < k && is_base; ++a)
      if ((base / stride[sites[a] - 1]) % dims[sites[a] - 1] != 0) is_base = false;
    if (!is_base) continue;
    for (long c = 0; c < local; ++c)
      for (long r = 0; r < local; ++r) {
        const cplx v = op(r, c);
        if (v != cplx{}) out(base + offset[r], base + offset[c]) += scale * v;
      }
  }
}

CMatrix embed(const CMatrix& op, std::span<const int> sites, std::span<const int> dims) {
  long total = 1;
  for (int d : dims) {
    if (d <= 0) throw Error(ErrorKind::invalid_dimension, "tensor factor dimension must be positive");
    total *= d;
  }
  CMatrix out = CMatrix::Zero(total, total);
  embed_accumulate(out, op, sites, dims, 1.0);
  return out;
}

CMatrix embed_two_site(const CMatrix& op, int i, int j, int n, int L) {
  if (i == j) throw Error(ErrorKind::invalid_sites, "two-site embedding needs i != j");
  const std::vector<int> dims(L, n);
  const int sites[] = {i, j};
  return embed(op, sites, dims);
}

CMatrix embed_one_site(const CMatrix& op, int i, int n, int L) {
  const std::vector<int> dims(L, n);
  const int sites[] = {i};
  return embed(op, sites, dims);
}

CMatrix partial_trace_first(const CMatrix& m, int first_dim) {
  const long rest = m.rows() / first_dim;
  CMatrix out = CMatrix::Zero(rest, rest);
  for (int a = 0; a < first_dim; ++a) out += m.block(a * rest, a * rest, rest, rest);
  return out;
}

double relative_difference(const CMatrix& a, const CMatrix& b) {
  const double na = a.norm();
  const double diff = (a - b).norm();
  return na > 0.0 ? diff / na : diff;
}

double bounded_residual(const CMatrix& lhs, const CMatrix& rhs) {
  return (lhs - rhs).norm() / std::max(lhs.norm(), 1.0);
}

double commutator_residual(const CMatrix& a, const CMatrix& b) {
  const double scale = a.norm() * b.norm();
  const double c = (a * b - b * a).norm();
  return scale > 0.0 ? c / scale : c;
}

ScalarFit fit_identity_multiple(const CMatrix& m) {
  const cplx s = m.trace() / static_cast<double>(m.rows());
  const CMatrix rem = m - s * CMatrix::Identity(m.rows(), m.cols());
  const double nm = m.norm();
  return {s, nm > 0.0 ? rem.norm() / nm : 0.0};
}

ScalarFit fit_proportional(const CMatrix& a, const CMatrix& b) {
  const cplx bb = b.cwiseAbs2().sum();
  const cplx ab = (b.conjugate().cwiseProduct(a)).sum();
  const cplx s = std::abs(bb) > 0.0 ? ab / bb : cplx{};
  const double na = a.norm();
  return {s, na > 0.0 ? (a - s * b).norm() / na : 0.0};
}

}  // namespace fzddn

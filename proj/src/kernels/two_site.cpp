#include "fzddn/kernels/two_site.hpp"

#include <vector>

#include <unsupported/Eigen/KroneckerProduct>

#include "fzddn/core/error.hpp"

namespace fzddn::kernels {
namespace {

struct Layout {
  long total = 1;
  long stride_i = 1;
  long stride_j = 1;
  int dim_i = 1;
  int dim_j = 1;
  std::vector<long> bases;  // rows whose digits at i and j are zero
};

Layout make_layout(int i, int j, std::span<const int> dims, long rows) {
  const int count = static_cast<int>(dims.size());
  if (i < 1 || i > count || j < 1 || j > count || i == j)
    throw Error(ErrorKind::invalid_sites, "kernel sites out of range");
  std::vector<long> stride(count, 1);
  for (int s = count - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];
  Layout lay;
  lay.total = stride[0] * dims[0];
  if (lay.total != rows) throw Error(ErrorKind::invalid_dimension, "state rows do not match dims");
  lay.stride_i = stride[i - 1];
  lay.stride_j = stride[j - 1];
  lay.dim_i = dims[i - 1];
  lay.dim_j = dims[j - 1];
  lay.bases.reserve(lay.total / (lay.dim_i * lay.dim_j));
  for (long r = 0; r < lay.total; ++r)
    if ((r / lay.stride_i) % lay.dim_i == 0 && (r / lay.stride_j) % lay.dim_j == 0)
      lay.bases.push_back(r);
  return lay;
}

std::vector<long> local_offsets(const Layout& lay) {
  std::vector<long> off(lay.dim_i * lay.dim_j);
  for (int a = 0; a < lay.dim_i; ++a)
    for (int b = 0; b < lay.dim_j; ++b) off[a * lay.dim_j + b] = a * lay.stride_i + b * lay.stride_j;
  return off;
}

void check_op(const CMatrix& op, long local) {
  if (op.rows() != local || op.cols() != local)
    throw Error(ErrorKind::invalid_dimension, "kernel operator does not match local dimensions");
}

}  // namespace

void apply_two_site(const CMatrix& op, int i, int j, std::span<const int> dims, CMatrix& x) {
  const Layout lay = make_layout(i, j, dims, x.rows());
  const long local = lay.dim_i * lay.dim_j;
  check_op(op, local);
  const std::vector<long> off = local_offsets(lay);
  const long cols = x.cols();
  const long nb = static_cast<long>(lay.bases.size());

#pragma omp parallel
  {
    CVector in(local);
    CVector out(local);
#pragma omp for schedule(static)
    for (long c = 0; c < cols; ++c) {
      cplx* col = x.col(c).data();
      for (long t = 0; t < nb; ++t) {
        const long base = lay.bases[t];
        for (long q = 0; q < local; ++q) in[q] = col[base + off[q]];
        out.noalias() = op * in;
        for (long q = 0; q < local; ++q) col[base + off[q]] = out[q];
      }
    }
  }
}

void apply_one_site(const CMatrix& op, int i, std::span<const int> dims, CMatrix& x) {
  // Pair with a neighbour and lift op to op (x) I.
  const int count = static_cast<int>(dims.size());
  if (count == 1) {
    x = op * x;
    return;
  }
  const int partner = i == count ? i - 1 : i + 1;
  const CMatrix lifted = Eigen::kroneckerProduct(op, CMatrix::Identity(dims[partner - 1], dims[partner - 1]));
  apply_two_site(lifted, i, partner, dims, x);
}

namespace serial {

void apply_two_site(const CMatrix& op, int i, int j, std::span<const int> dims, CMatrix& x) {
  const Layout lay = make_layout(i, j, dims, x.rows());
  const long local = lay.dim_i * lay.dim_j;
  check_op(op, local);
  const std::vector<long> off = local_offsets(lay);
  CMatrix gathered(local, x.cols());
  for (long base : lay.bases) {
    for (long q = 0; q < local; ++q) gathered.row(q) = x.row(base + off[q]);
    const CMatrix updated = op * gathered;
    for (long q = 0; q < local; ++q) x.row(base + off[q]) = updated.row(q);
  }
}

void apply_one_site(const CMatrix& op, int i, std::span<const int> dims, CMatrix& x) {
  const int count = static_cast<int>(dims.size());
  if (count == 1) {
    x = op * x;
    return;
  }
  const int partner = i == count ? i - 1 : i + 1;
  const CMatrix lifted = Eigen::kroneckerProduct(op, CMatrix::Identity(dims[partner - 1], dims[partner - 1]));
  apply_two_site(lifted, i, partner, dims, x);
}

}  // namespace serial

}  // namespace fzddn::kernels

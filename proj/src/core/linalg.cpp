#include "fzddn/core/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "fzddn/core/error.hpp"
#include "fzddn/core/tensor.hpp"

namespace fzddn {

double hermiticity_defect(const CMatrix& a) {
  const double na = a.norm();
  const double d = (a - a.adjoint()).norm();
  return na > 0.0 ? d / na : d;
}

HermitianEigen eig_hermitian(const CMatrix& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::invalid_dimension, "eig_hermitian needs a square matrix");
  if (hermiticity_defect(a) > 1e-10)
    throw Error(ErrorKind::precondition_violation, "eig_hermitian input is not self-adjoint");
  const CMatrix sym = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix> solver(sym);
  if (solver.info() != Eigen::Success)
    throw Error(ErrorKind::precondition_violation, "self-adjoint eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

namespace {

constexpr double kClusterTol = 1e-7;

std::vector<Cluster> split_clusters(const Eigen::VectorXd& values, int begin) {
  std::vector<Cluster> out;
  const int m = static_cast<int>(values.size());
  int start = 0;
  for (int k = 1; k <= m; ++k) {
    if (k == m || values[k] - values[k - 1] > kClusterTol) {
      out.push_back({begin + start, k - start});
      start = k;
    }
  }
  return out;
}

// RMS eigenvalue scale so cluster tolerances are absolute on O(1) spectra.
CMatrix normalized(const CMatrix& h) {
  const double rms = h.norm() / std::sqrt(static_cast<double>(h.rows()));
  return rms > 0.0 ? CMatrix(h / rms) : h;
}

}  // namespace

SimultaneousBasis simultaneous_eigenbasis(std::span<const CMatrix> family, std::uint64_t seed) {
  if (family.empty()) throw Error(ErrorKind::precondition_violation, "empty family");
  const long dim = family.front().rows();
  for (const auto& a : family)
    if (a.rows() != dim || a.cols() != dim)
      throw Error(ErrorKind::invalid_dimension, "family members must be square and of equal size");
  for (std::size_t p = 0; p < family.size(); ++p)
    for (std::size_t q = p + 1; q < family.size(); ++q)
      if (commutator_residual(family[p], family[q]) > 1e-8)
        throw Error(ErrorKind::precondition_violation, "family does not commute");

  std::vector<CMatrix> parts;
  parts.reserve(2 * family.size());
  for (const auto& a : family) {
    const CMatrix re = 0.5 * (a + a.adjoint());
    const CMatrix im = (a - a.adjoint()) / cplx{0.0, 2.0};
    if (re.norm() > 1e-10 * a.norm()) parts.push_back(normalized(re));
    if (im.norm() > 1e-10 * a.norm()) parts.push_back(normalized(im));
  }
  if (parts.empty()) {
    return {CMatrix::Identity(dim, dim), {{0, static_cast<int>(dim)}}, 0.0};
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.5, 1.5);
  CMatrix mix = CMatrix::Zero(dim, dim);
  for (const auto& h : parts) mix += weight(rng) * h;

  HermitianEigen base = eig_hermitian(mix);
  CMatrix v = base.vectors;
  std::vector<Cluster> clusters = split_clusters(base.values, 0);

  for (const auto& h : parts) {
    std::vector<Cluster> next;
    for (const Cluster& c : clusters) {
      if (c.size == 1) {
        next.push_back(c);
        continue;
      }
      const CMatrix block = v.middleCols(c.begin, c.size);
      const CMatrix reduced = block.adjoint() * h * block;
      Eigen::SelfAdjointEigenSolver<CMatrix> solver(0.5 * (reduced + reduced.adjoint()));
      v.middleCols(c.begin, c.size) = block * solver.eigenvectors();
      for (const Cluster& s : split_clusters(solver.eigenvalues(), c.begin)) next.push_back(s);
    }
    clusters = std::move(next);
  }

  double worst = 0.0;
  for (const auto& a : family) {
    CMatrix d = v.adjoint() * a * v;
    d.diagonal().setZero();
    const double na = a.norm();
    worst = std::max(worst, na > 0.0 ? d.norm() / na : d.norm());
  }
  return {v, clusters, worst};
}

}  // namespace fzddn

#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "fzddn/core/error.hpp"
#include "fzddn/core/linalg.hpp"
#include "fzddn/core/poly.hpp"
#include "fzddn/core/sampling.hpp"
#include "fzddn/core/tensor.hpp"
#include "fzddn/kernels/sweep.hpp"
#include "fzddn/kernels/two_site.hpp"
#include "oracles.hpp"

using namespace fzddn;

namespace {

CMatrix random_matrix(long r, long c, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  CMatrix m(r, c);
  for (long i = 0; i < r; ++i)
    for (long j = 0; j < c; ++j) m(i, j) = cplx(g(rng), g(rng));
  return m;
}

long ipow(int n, int L) {
  long d = 1;
  for (int i = 0; i < L; ++i) d *= n;
  return d;
}

}  // namespace

TEST(Tensor, KronMatchesElementwiseDefinition) {
  std::mt19937_64 rng(1);
  const CMatrix a = random_matrix(2, 3, rng);
  const CMatrix b = random_matrix(3, 2, rng);
  const CMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j)
      for (int p = 0; p < 3; ++p)
        for (int q = 0; q < 2; ++q) EXPECT_EQ(k(i * 3 + p, j * 2 + q), a(i, j) * b(p, q));
}

TEST(Tensor, PermutationSwapsFactors) {
  for (int n : {2, 3, 5}) EXPECT_EQ((permutation_op(n) - oracle::swap(n)).norm(), 0.0);
}

TEST(Tensor, EmbedMatchesDigitLoopOracle) {
  std::mt19937_64 rng(2);
  for (int n : {2, 3}) {
    const int L = 4;
    const CMatrix op = random_matrix(n * n, n * n, rng);
    const std::vector<int> dims(L, n);
    for (int i = 1; i <= L; ++i)
      for (int j = 1; j <= L; ++j) {
        if (i == j) continue;
        const int sites[] = {i, j};
        EXPECT_LT((embed(op, sites, dims) - oracle::embed(op, i, j, n, L)).norm(), 1e-12) << i << "," << j;
      }
  }
}

TEST(Tensor, EmbedRejectsMismatchedDimensions) {
  const std::vector<int> dims = {3, 3};
  const int sites[] = {1, 2};
  EXPECT_THROW(embed(identity(4), sites, dims), Error);
}

TEST(Tensor, ProportionalityFit) {
  std::mt19937_64 rng(3);
  const CMatrix a = random_matrix(4, 4, rng);
  const ScalarFit f = fit_proportional(cplx(0.3, -2.0) * a, a);
  EXPECT_NEAR(std::abs(f.scale - cplx(0.3, -2.0)), 0.0, 1e-12);
  EXPECT_LT(f.residual, 1e-12);
  EXPECT_GT(fit_proportional(a, random_matrix(4, 4, rng)).residual, 1e-3);
  EXPECT_LT(fit_identity_multiple(cplx(2, 1) * identity(5)).residual, 1e-15);
}

TEST(Tensor, PartialTraceFirst) {
  std::mt19937_64 rng(4);
  const CMatrix a = random_matrix(2, 2, rng);
  const CMatrix b = random_matrix(3, 3, rng);
  EXPECT_LT((partial_trace_first(kron(a, b), 2) - a.trace() * b).norm(), 1e-12);
}

// Parallel and serial kernels agree with each other and with the dense embedding.
class KernelAgreement : public ::testing::TestWithParam<std::tuple<int, int>> {};

TEST_P(KernelAgreement, TwoSite) {
  const auto [n, L] = GetParam();
  std::mt19937_64 rng(10 * n + L);
  const std::vector<int> dims(L, n);
  const long dim = ipow(n, L);
  for (int trial = 0; trial < 4; ++trial) {
    std::uniform_int_distribution<int> site(1, L);
    int i = site(rng), j = site(rng);
    while (j == i) j = site(rng);
    const CMatrix op = random_matrix(n * n, n * n, rng);
    const CMatrix x0 = random_matrix(dim, 7, rng);
    CMatrix par = x0, ser = x0;
    kernels::apply_two_site(op, i, j, dims, par);
    kernels::serial::apply_two_site(op, i, j, dims, ser);
    const CMatrix dense = oracle::embed(op, i, j, n, L) * x0;
    EXPECT_LT((par - dense).norm() / dense.norm(), 1e-13);
    EXPECT_LT((ser - dense).norm() / dense.norm(), 1e-13);
  }
}

TEST_P(KernelAgreement, OneSite) {
  const auto [n, L] = GetParam();
  std::mt19937_64 rng(100 + n + L);
  const std::vector<int> dims(L, n);
  for (int i = 1; i <= L; ++i) {
    const CMatrix op = random_matrix(n, n, rng);
    const CMatrix x0 = random_matrix(ipow(n, L), 3, rng);
    CMatrix par = x0, ser = x0;
    kernels::apply_one_site(op, i, dims, par);
    kernels::serial::apply_one_site(op, i, dims, ser);
    const CMatrix dense = oracle::embed1(op, i, n, L) * x0;
    EXPECT_LT((par - dense).norm() / dense.norm(), 1e-13);
    EXPECT_LT((ser - dense).norm() / dense.norm(), 1e-13);
  }
}

INSTANTIATE_TEST_SUITE_P(Sizes, KernelAgreement,
                         ::testing::Values(std::tuple{2, 2}, std::tuple{2, 5}, std::tuple{3, 3}, std::tuple{3, 4},
                                           std::tuple{5, 2}, std::tuple{5, 3}));

TEST(Kernels, SweepPreservesOrderAndRethrows) {
  const auto par = kernels::sweep(100, [](std::size_t k) { return static_cast<double>(k * k); });
  const auto ser = kernels::serial::sweep(100, [](std::size_t k) { return static_cast<double>(k * k); });
  EXPECT_EQ(par, ser);
  EXPECT_THROW(kernels::sweep(10,
                              [](std::size_t k) -> int {
                                if (k == 7) throw Error(ErrorKind::singular_parameter, "x");
                                return 0;
                              }),
               Error);
}

TEST(Linalg, HermitianEigenReconstructs) {
  std::mt19937_64 rng(5);
  CMatrix a = random_matrix(12, 12, rng);
  a = (a + a.adjoint()).eval();
  const HermitianEigen e = eig_hermitian(a);
  for (long k = 1; k < e.values.size(); ++k) EXPECT_LE(e.values[k - 1], e.values[k]);
  const CMatrix rec = e.vectors * e.values.cast<cplx>().asDiagonal() * e.vectors.adjoint();
  EXPECT_LT((rec - a).norm(), 1e-11);
  EXPECT_GT(hermiticity_defect(random_matrix(3, 3, rng)), 1e-3);
}

TEST(Linalg, SimultaneousBasisSplitsDegeneracies) {
  // Two commuting normal matrices whose individual spectra are degenerate
  // but whose joint spectrum is not.
  std::mt19937_64 rng(6);
  CMatrix q = random_matrix(6, 6, rng);
  q = Eigen::HouseholderQR<CMatrix>(q).householderQ();
  CVector d1(6), d2(6);
  d1 << 1, 1, 1, 2, 2, cplx(0, 3);
  d2 << 5, 6, 7, 5, 6, 5;
  const std::vector<CMatrix> fam = {q * d1.asDiagonal() * q.adjoint(), q * d2.asDiagonal() * q.adjoint()};
  const SimultaneousBasis b = simultaneous_eigenbasis(fam, 0);
  EXPECT_TRUE(b.resolved());
  for (const CMatrix& m : fam) {
    const CMatrix t = b.vectors.adjoint() * m * b.vectors;
    EXPECT_LT((t - CMatrix(t.diagonal().asDiagonal())).norm(), 1e-10);
  }
  EXPECT_LT((b.vectors.adjoint() * b.vectors - identity(6)).norm(), 1e-12);
}

TEST(Poly, FitRecoversRootsAndZeroRoots) {
  const std::vector<cplx> roots = {cplx(0.4, 0.1), cplx(-1.2, 0.7), 0.0};
  const cplx lead(2.0, -1.0);
  auto p = [&](cplx z) {
    cplx v = lead;
    for (const cplx& r : roots) v *= z - r;
    return v;
  };
  const auto pts = circle_nodes(9, 1.0, 0.31);
  std::vector<cplx> vals;
  for (const cplx& z : pts) vals.push_back(p(z));
  const PolyFit fit = poly_fit_roots(pts, vals, 6);
  ASSERT_EQ(fit.degree, 3);
  EXPECT_LT(fit.residual, 1e-12);
  EXPECT_NEAR(std::abs(fit.leading - lead), 0.0, 1e-12);
  EXPECT_EQ(fit.roots.front(), cplx(0.0));
  for (const cplx& r : roots) {
    double best = 1e9;
    for (const cplx& s : fit.roots) best = std::min(best, std::abs(r - s));
    EXPECT_LT(best, 1e-10);
  }
}

TEST(Poly, FitNeedsEnoughDistinctPoints) {
  const std::vector<cplx> pts = {1.0, 2.0, 3.0};
  const std::vector<cplx> vals = {1.0, 1.0, 1.0};
  EXPECT_THROW(poly_fit_roots(pts, vals, 2), Error);
}

TEST(Sampling, DeterministicAndOffLoci) {
  PointSampler a(5, 42), b(5, 42), c(5, 43);
  bool differs = false;
  for (int k = 0; k < 200; ++k) {
    const SpectralPoint x = a.point(), y = b.point(), z = c.point();
    EXPECT_EQ(x.z1, y.z1);
    EXPECT_EQ(x.z2, y.z2);
    differs = differs || x.z1 != z.z1;
    EXPECT_FALSE(near_root_locus(x, 5));
    EXPECT_NEAR(std::abs(x.z1), 1.0, 1e-15);
  }
  EXPECT_TRUE(differs);
}

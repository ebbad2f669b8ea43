#include <gtest/gtest.h>

#include "fzddn/bethe/bethe.hpp"
#include "fzddn/core/error.hpp"
#include "oracles.hpp"

using namespace fzddn;

namespace {

ChainSpec chain(int L, BoundaryKind kind, BraidPoint z0 = {}) {
  ChainSpec s(RootContext(3), L, kind);
  s.braid = z0;
  return s;
}

// the printed Bethe equation, LHS / RHS, for root j of family a
cplx printed_ratio(const ChainSpec& s, const std::vector<cplx>& ys, int j, int family) {
  const int n = s.n(), L = s.sites;
  cplx lhs;
  if (s.boundary == BoundaryKind::open) {
    lhs = oracle::bethe_lhs_open(n, L, ys[j]);
  } else {
    cplx ratio = 1.0;  // b/c: 1 at 0, -1 at infinity (and its conjugate)
    if (s.boundary == BoundaryKind::braided && (family == 1 ? s.braid.z1_infinite : s.braid.z2_infinite)) ratio = -1.0;
    lhs = oracle::bethe_lhs_periodic(n, L, ys[j], ratio);
  }
  return lhs / oracle::bethe_rhs(n, ys, j);
}

}  // namespace

TEST(Bethe, DegreeBound) {
  EXPECT_EQ(ansatz_degree_bound(chain(2, BoundaryKind::periodic)), 2);
  EXPECT_EQ(ansatz_degree_bound(chain(3, BoundaryKind::periodic)), 3);
  EXPECT_EQ(ansatz_degree_bound(chain(2, BoundaryKind::open)), 4);
  EXPECT_EQ(ansatz_degree_bound(chain(2, BoundaryKind::braided)), 2);
}

namespace fzddn {
void PrintTo(BoundaryKind k, std::ostream* os) { *os << to_string(k); }
void PrintTo(const BraidPoint& z0, std::ostream* os) { *os << z0.label(); }
}  // namespace fzddn

class BetheClasses : public ::testing::TestWithParam<std::tuple<BoundaryKind, BraidPoint>> {};

std::string class_name(const ::testing::TestParamInfo<BetheClasses::ParamType>& info) {
  const BoundaryKind kind = std::get<0>(info.param);
  const BraidPoint z0 = std::get<1>(info.param);
  std::string name = to_string(kind);
  if (kind == BoundaryKind::braided) name += std::string(z0.z1_infinite ? "_inf" : "_0") + (z0.z2_infinite ? "_inf" : "_0");
  return name;
}

INSTANTIATE_TEST_SUITE_P(
    Chains, BetheClasses,
    ::testing::Values(std::tuple{BoundaryKind::periodic, BraidPoint{}}, std::tuple{BoundaryKind::open, BraidPoint{}},
                      std::tuple{BoundaryKind::braided, BraidPoint{false, false}},
                      std::tuple{BoundaryKind::braided, BraidPoint{false, true}},
                      std::tuple{BoundaryKind::braided, BraidPoint{true, false}},
                      std::tuple{BoundaryKind::braided, BraidPoint{true, true}}),
    class_name);

TEST_P(BetheClasses, EveryCurveClassifiedAndSatisfiesTheEquations) {
  const auto [kind, z0] = GetParam();
  const ChainSpec s = chain(2, kind, z0);
  const BetheReport r = bethe_report(s, 0, 1e-6);
  EXPECT_TRUE(r.basis_resolved);
  EXPECT_EQ(r.count(CurveClass::unresolved), 0);
  EXPECT_EQ(static_cast<int>(r.entries.size()), 9);
  EXPECT_TRUE(r.all_pass());
  for (const BetheEntry& e : r.entries) {
    EXPECT_LT(e.bethe1, 1e-6);
    EXPECT_LT(e.bethe2, 1e-6);
    EXPECT_LT(e.functional, 1e-6);
    EXPECT_LT(e.roots.reconstruction_residual, 1e-7);
    EXPECT_LT(e.roots.factorization_residual, 1e-7);
    if (e.roots.classification != CurveClass::ansatz) continue;
    for (int family : {1, 2}) {
      const auto& ys = family == 1 ? e.roots.y1 : e.roots.y2;
      for (std::size_t j = 0; j < ys.size(); ++j) {
        if (std::abs(ys[j]) < 1e-8) continue;
        const cplx lib = bethe_ratio(s, ys, static_cast<int>(j), family);
        EXPECT_NEAR(std::abs(lib - printed_ratio(s, ys, static_cast<int>(j), family)), 0.0, 1e-9);
        EXPECT_NEAR(std::abs(lib - 1.0), 0.0, 1e-6);
      }
    }
  }
}

TEST(Bethe, AnsatzReproducesEigenvalues) {
  // Lambda = c prod (z1 - i w y1) prod (z2 + i w^-1 conj(y2)) at points never used by the fit
  const ChainSpec s = chain(2, BoundaryKind::periodic);
  const EigenvalueCurves curves(s, 0);
  const auto roots = fit_ansatz(curves, 0);
  const cplx w = oracle::w(3);
  for (const SpectralPoint p : {SpectralPoint{cplx(0.3, -1.7), cplx(2.1, 0.4)}, SpectralPoint{cplx(-0.9, 0.2), cplx(0.1, 0.6)}}) {
    const auto values = curves.t3_values(p);
    double scale = 0.0;
    for (const cplx& v : values) scale = std::max(scale, std::abs(v));
    for (std::size_t k = 0; k < roots.size(); ++k) {
      cplx model = roots[k].constant;
      for (const cplx& y : roots[k].y1) model *= p.z1 - kI * w * y;
      for (const cplx& y : roots[k].y2) model *= p.z2 + kI / w * std::conj(y);
      EXPECT_LT(std::abs(model - values[k]) / scale, 1e-7) << k;
    }
  }
}

TEST(Bethe, ResiduesReproduceTheBetheEquation) {
  const ChainSpec s = chain(2, BoundaryKind::periodic);
  const EigenvalueCurves curves(s, 0);
  const auto roots = fit_ansatz(curves, 0);
  const cplx w = oracle::w(3);
  int checked = 0;
  for (std::size_t k = 0; k < roots.size(); ++k)
    for (std::size_t j = 0; j < roots[k].y1.size(); ++j) {
      const cplx y = roots[k].y1[j];
      if (std::abs(y) < 1e-6) continue;
      const cplx q = residue_ratio(curves, static_cast<int>(k), AuxFamily::first, kI * w * y, cplx(0.8, 0.3));
      EXPECT_NEAR(std::abs(q - bethe_ratio(s, roots[k].y1, static_cast<int>(j), 1)), 0.0, 1e-5);
      ++checked;
    }
  EXPECT_GT(checked, 0);
}

TEST(Bethe, LargerPeriodicChain) {
  const BetheReport r = bethe_report(chain(3, BoundaryKind::periodic), 0, 1e-6);
  EXPECT_EQ(r.count(CurveClass::unresolved), 0);
  EXPECT_TRUE(r.all_pass());
}

TEST(Bethe, EquationResidualDetectsPerturbedRoots) {
  const ChainSpec s = chain(2, BoundaryKind::periodic);
  const BetheReport r = bethe_report(s, 0, 1e-6);
  for (const BetheEntry& e : r.entries) {
    auto ys = e.roots.y1;
    bool has_nonzero = false;
    for (const cplx& y : ys) has_nonzero = has_nonzero || std::abs(y) > 1e-6;
    if (!has_nonzero) continue;
    for (cplx& y : ys) y *= cplx(1.01, 0.02);
    EXPECT_GT(bethe_residual(s, ys, 1), 1e-4);
    return;
  }
  FAIL() << "no curve with a nonzero root";
}

TEST(Bethe, RejectsUnknownFamily) {
  EXPECT_THROW(bethe_residual(chain(2, BoundaryKind::periodic), {cplx(1.0)}, 3), Error);
}

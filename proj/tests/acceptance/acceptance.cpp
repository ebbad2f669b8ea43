// One PASS/FAIL line per acceptance criterion; exit status 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "fzddn/bethe/bethe.hpp"
#include "fzddn/chain/hamiltonian.hpp"
#include "fzddn/core/linalg.hpp"
#include "fzddn/core/sampling.hpp"
#include "fzddn/core/tensor.hpp"
#include "fzddn/dihedral/double.hpp"
#include "fzddn/fz/projectors.hpp"
#include "fzddn/fz/rmatrix.hpp"
#include "fzddn/kernels/sweep.hpp"
#include "fzddn/transfer/fusion.hpp"
#include "fzddn/transfer/transfer.hpp"
#include "oracles.hpp"

using namespace fzddn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what, double value) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s=%.2e", detail.empty() ? "" : " ", what.c_str(), value);
    detail += buf;
    pass = pass && ok;
  }
};

double max_over(std::size_t count, const std::function<double(std::size_t)>& f) {
  double m = 0.0;
  for (double v : kernels::sweep(count, f)) m = std::max(m, v);
  return m;
}

std::vector<ChainSpec> boundary_classes(int n, int L, bool with_twist) {
  const RootContext ctx(n);
  std::vector<ChainSpec> out = {ChainSpec(ctx, L, BoundaryKind::periodic), ChainSpec(ctx, L, BoundaryKind::open)};
  if (with_twist) {
    ChainSpec t(ctx, L, BoundaryKind::twisted);
    t.twist = DihedralElement::tau(n);
    out.push_back(t);
  }
  for (const BraidPoint& z0 : BraidPoint::all()) {
    ChainSpec b(ctx, L, BoundaryKind::braided);
    b.braid = z0;
    out.push_back(b);
  }
  return out;
}

std::string label(const ChainSpec& s) {
  std::string l = to_string(s.boundary);
  if (s.boundary == BoundaryKind::braided) l += s.braid.label();
  return l;
}

using Clock = std::chrono::steady_clock;
double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

Outcome criterion_ybe() {
  Outcome o;
  const auto start = Clock::now();
  for (int n : {3, 5}) {
    const RootContext ctx(n);
    PointSampler s(n, 0);
    std::vector<std::pair<SpectralPoint, SpectralPoint>> pts;
    for (int k = 0; k < 25; ++k) pts.push_back(s.product_safe_pair());
    const double r = max_over(pts.size(), [&](std::size_t k) {
      const auto& [x, y] = pts[k];
      return oracle::ybe(rmatrix_dd(ctx, x), rmatrix_dd(ctx, x * y), rmatrix_dd(ctx, y), n);
    });
    o.require(r < 1e-9, "n" + std::to_string(n), r);
  }
  const double t = seconds_since(start);
  o.require(t < 10.0, "seconds", t);
  return o;
}

Outcome criterion_unitarity() {
  Outcome o;
  for (int n : {3, 5}) {
    const RootContext ctx(n);
    const CMatrix perm = permutation_op(n);
    const double reg = (rmatrix_dd(ctx, SpectralPoint::one()) - perm).norm();
    o.require(reg < 1e-12, "regularity_n" + std::to_string(n), reg);
    PointSampler s(n, 0);
    double worst = 0.0;
    bool finite = true;
    for (int k = 0; k < 10; ++k) {
      const SpectralPoint p = s.mixed_radius_point();
      const ScalarFit f = fit_identity_multiple(rmatrix_dd(ctx, p) * perm * rmatrix_dd(ctx, p.inverse()) * perm);
      worst = std::max(worst, f.residual);
      finite = finite && std::isfinite(std::abs(f.scale)) && std::abs(f.scale) > 1e-12;
    }
    o.require(worst < 1e-9 && finite, "unitarity_n" + std::to_string(n), worst);
  }
  return o;
}

Outcome criterion_projectors() {
  Outcome o;
  for (int n : {3, 5}) {
    const RootContext ctx(n);
    const auto pairs = admissible_pairs(n);
    std::vector<CMatrix> proj;
    for (const auto& [a, b] : pairs) proj.push_back(projector(ctx, a, b));
    double idem = 0, orth = 0;
    CMatrix sum = CMatrix::Zero(n * n, n * n);
    for (std::size_t i = 0; i < proj.size(); ++i) {
      idem = std::max(idem, (proj[i] * proj[i] - proj[i]).norm());
      for (std::size_t j = 0; j < proj.size(); ++j)
        if (i != j) orth = std::max(orth, (proj[i] * proj[j]).norm());
      sum += proj[i];
    }
    const double comp = (sum - identity(n * n)).norm();
    PointSampler s(n, 0);
    const CMatrix perm = permutation_op(n);
    double dec = 0.0;
    for (int k = 0; k < 10; ++k) {
      const SpectralPoint p = s.mixed_radius_point();
      CMatrix model = CMatrix::Zero(n * n, n * n);
      for (std::size_t i = 0; i < pairs.size(); ++i)
        model += eigenfunction_f(ctx, pairs[i].first, pairs[i].second, p) * proj[i];
      dec = std::max(dec, relative_difference(perm * rmatrix_dd(ctx, p), model));
    }
    const std::string tag = "_n" + std::to_string(n);
    o.require(idem < 1e-12, "idempotent" + tag, idem);
    o.require(orth < 1e-12, "orthogonal" + tag, orth);
    o.require(comp < 1e-12, "complete" + tag, comp);
    o.require(dec < 1e-9, "decomposition" + tag, dec);
  }
  return o;
}

double commutator(const CMatrix& a, const CMatrix& b) { return (a * b - b * a).norm() / (a.norm() * b.norm()); }

Outcome criterion_symmetry() {
  Outcome o;
  const int n = 3, L = 3;
  const RootContext ctx(n);
  const auto sg = DihedralElement::sigma(n), tau = DihedralElement::tau(n);
  const std::vector<DoubleElement> gens = {DoubleElement::group(sg), DoubleElement::group(tau), DoubleElement::dual(tau)};
  PointSampler s(n, 0);
  double inter = 0.0;
  for (int k = 0; k < 10; ++k) {
    const CMatrix pr = permutation_op(n) * rmatrix_dd(ctx, s.mixed_radius_point());
    for (const auto& x : gens) inter = std::max(inter, commutator(pr, coproduct_power(ctx, x, 2)));
  }
  o.require(inter < 1e-10, "intertwining", inter);

  const CMatrix open = global_hamiltonian(ChainSpec(ctx, L, BoundaryKind::open));
  double inv = 0.0;
  for (const auto& x : gens) inv = std::max(inv, commutator(open, coproduct_power(ctx, x, L)));
  o.require(inv < 1e-10, "open_invariance", inv);

  const CMatrix per = global_hamiltonian(ChainSpec(ctx, L, BoundaryKind::periodic));
  double cc = 0.0;
  for (const auto& x : cocommutative_subspace(ctx)) cc = std::max(cc, commutator(per, coproduct_power(ctx, x, L)));
  o.require(cc < 1e-10, "periodic_cocommutative", cc);
  double witness = 0.0;
  std::string who;
  for (const auto& h : dihedral_elements(n)) {
    const double r = commutator(per, coproduct_power(ctx, DoubleElement::dual(h), L));
    if (r > witness) {
      witness = r;
      who = h.label() + "*";
    }
  }
  o.require(witness > 1e-6, "witness[" + who + "]", witness);
  return o;
}

Outcome criterion_hamiltonian() {
  Outcome o;
  for (int n : {3, 5}) {
    const RootContext ctx(n);
    const CMatrix perm = permutation_op(n);
    const CMatrix h1 = h_component(ctx, 1), h2 = h_component(ctx, 2);
    const double e = 1e-5;
    const CMatrix d1 = (rmatrix_dd(ctx, {1.0 + e, 1.0}) - rmatrix_dd(ctx, {1.0 - e, 1.0})) / (2 * e);
    const double fd = relative_difference(h1, kI * perm * d1);
    const std::string tag = "_n" + std::to_string(n);
    o.require(fd < 1e-6, "finite_difference" + tag, fd);
    const double swap = (perm * h1 * perm - h2).norm();
    const double conj = (CMatrix(h1.conjugate()) - h2).norm();
    o.require(swap < 1e-12, "PH1P" + tag, swap);
    o.require(conj < 1e-12, "conjugate" + tag, conj);
  }
  double herm = 0.0, trace = 0.0;
  for (const ChainSpec& s : boundary_classes(3, 3, true)) {
    const CMatrix H = global_hamiltonian(s);
    herm = std::max(herm, hermiticity_defect(H));
    trace = std::max(trace, std::abs(H.trace()));
  }
  o.require(herm < 1e-10, "self_adjoint", herm);
  o.require(trace < 1e-10, "traceless", trace);
  return o;
}

Outcome criterion_braid() {
  Outcome o;
  for (int n : {3, 5}) {
    const RootContext ctx(n);
    const NormalizedRMatrix rn(ctx);
    double rel = 0.0, inverse = 0.0;
    for (const BraidPoint& z0 : BraidPoint::all()) {
      const CMatrix b = braid_b(rn, z0);
      const CMatrix b1 = kron(b, identity(n)), b2 = kron(identity(n), b);
      rel = std::max(rel, relative_difference(b1 * b2 * b1, b2 * b1 * b2));
      inverse = std::max(inverse, (b * braid_b(rn, z0.inverse()) - identity(n * n)).norm());
    }
    const double canon = (braid_b(rn, {false, false}) - permutation_op(n) * canonical_R(ctx)).norm();
    const std::string tag = "_n" + std::to_string(n);
    o.require(rel < 1e-12, "braid_relation" + tag, rel);
    o.require(canon < 1e-12, "canonical" + tag, canon);
    o.require(inverse < 1e-12, "inverse_pairs" + tag, inverse);
  }
  return o;
}

Outcome criterion_transfer() {
  Outcome o;
  const int n = 3, L = 3;
  double comm = 0.0, ham = 0.0;
  for (const ChainSpec& s : boundary_classes(n, L, true)) {
    const NormalizedRMatrix rn(s.ctx);
    PointSampler ps(n, 0);
    std::vector<std::pair<SpectralPoint, SpectralPoint>> pts;
    for (int k = 0; k < 25; ++k) pts.emplace_back(ps.mixed_radius_point(), ps.mixed_radius_point());
    const double c = max_over(pts.size(), [&](std::size_t k) {
      return commutator_residual(transfer_t3(s, rn, pts[k].first), transfer_t3(s, rn, pts[k].second));
    });
    comm = std::max(comm, c);
    ham = std::max(ham, commutator_residual(transfer_t3(s, rn, SpectralPoint::one()), global_hamiltonian(s)));
  }
  o.require(comm < 1e-8, "commutators", comm);
  o.require(ham < 1e-10, "t(1)_H", ham);
  return o;
}

Outcome criterion_fusion() {
  Outcome o;
  const auto start = Clock::now();
  const int n = 3, L = 2;
  for (const ChainSpec& s : boundary_classes(n, L, false)) {
    PointSampler ps(n, 0);
    double worst = 0.0;
    for (AuxFamily fam : {AuxFamily::first, AuxFamily::second}) {
      std::vector<SpectralPoint> pts;
      while (pts.size() < 10) {
        const SpectralPoint p = ps.mixed_radius_point();
        if (fusion_point_admissible(s, p, fam)) pts.push_back(p);
      }
      worst = std::max(worst, fusion_sweep(s, pts, fam).max_residual());
    }
    o.require(worst < 1e-7, label(s), worst);
  }
  const RootContext ctx(n);
  const NormalizedRMatrix rn(ctx);
  PointSampler ps(n, 0);
  double upper = 0.0;
  for (int k = 0; k < 10; ++k) upper = std::max(upper, block_triangular_check(rn, ps.mixed_radius_point()).upper_right);
  o.require(upper < 1e-9, "upper_block", upper);
  const double t = seconds_since(start);
  o.require(t < 60.0, "seconds", t);
  return o;
}

Outcome criterion_bethe() {
  Outcome o;
  std::vector<ChainSpec> chains = boundary_classes(3, 2, false);
  chains.emplace_back(RootContext(3), 3, BoundaryKind::periodic);
  for (const ChainSpec& s : chains) {
    const BetheReport r = bethe_report(s, 0, 1e-6);
    double worst = 0.0;
    for (const BetheEntry& e : r.entries)
      if (e.roots.classification != CurveClass::unresolved) worst = std::max({worst, e.bethe1, e.bethe2});
    const int unresolved = r.count(CurveClass::unresolved);
    const std::string tag = label(s) + "_L" + std::to_string(s.sites);
    o.require(worst < 1e-6 && unresolved == 0, tag, worst);
    o.require(unresolved == 0, tag + "_unresolved", unresolved);
  }
  return o;
}

Outcome criterion_conjugacy() {
  Outcome o;
  const RootContext ctx(3);
  const auto tau = DihedralElement::tau(3);
  double worst = 0.0;
  for (const auto& h : conjugacy_class(tau))
    worst = std::max(worst, conjugacy_equivalence_check(ctx, 3, tau, h).max_abs_difference);
  o.require(worst < 1e-8, "spectral_difference", worst);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
      {"two-parameter Yang-Baxter equation", criterion_ybe},
      {"regularity and unitarity", criterion_unitarity},
      {"projector suite", criterion_projectors},
      {"symmetry suite", criterion_symmetry},
      {"Hamiltonian identities", criterion_hamiltonian},
      {"braid suite", criterion_braid},
      {"transfer commutativity", criterion_transfer},
      {"fusion suite", criterion_fusion},
      {"Bethe suite", criterion_bethe},
      {"conjugacy-class equivalence", criterion_conjugacy},
  };
  bool all = true;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index++, name, o.detail.c_str());
    std::fflush(stdout);
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

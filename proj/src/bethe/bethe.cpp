#include "fzddn/bethe/bethe.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "fzddn/core/error.hpp"
#include "fzddn/core/poly.hpp"
#include "fzddn/core/sampling.hpp"
#include "fzddn/kernels/sweep.hpp"

namespace fzddn {
namespace {

constexpr double kZeroRoot = 1e-9;
constexpr double kPoleGuard = 1e-10;

// Fixed complementary variables for the per-variable fits.
const cplx kFixedZ2 = std::polar(0.8, 0.7);
const cplx kFixedZ2Alt = std::polar(1.25, -1.9);
const cplx kFixedZ1 = std::polar(1.2, 0.3);
const cplx kFixedZ1Alt = std::polar(0.7, 2.2);

bool has_aux_family(const ChainSpec& spec) { return spec.boundary != BoundaryKind::twisted; }

// Largest distance between two root multisets under greedy nearest matching.
double root_set_distance(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  if (a.size() != b.size()) return 1.0;
  std::vector<bool> used(b.size(), false);
  double worst = 0.0;
  for (const cplx& x : a) {
    double best = std::numeric_limits<double>::infinity();
    std::size_t pick = 0;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k]) continue;
      const double d = std::abs(x - b[k]);
      if (d < best) {
        best = d;
        pick = k;
      }
    }
    used[pick] = true;
    worst = std::max(worst, best / std::max(1.0, std::abs(x)));
  }
  return worst;
}

cplx ipow(cplx x, int e) {
  cplx r = 1.0;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

cplx bethe_lhs(const ChainSpec& spec, cplx y, int family) {
  const RootContext& ctx = spec.ctx;
  const int L = spec.sites;
  const cplx w = ctx.w();
  const double sign = (L % 2 == 0) ? -1.0 : 1.0;  // (-1)^{L+1}
  const cplx den = 1.0 - kI * w * y;
  if (std::abs(den) < kPoleGuard) throw Error(ErrorKind::singular_roots, "root on a pole of the Bethe equation");
  const cplx base = (1.0 + kI * y / w) / den;
  switch (spec.boundary) {
    case BoundaryKind::periodic:
      return sign * ipow(base, L);
    case BoundaryKind::open: {
      const cplx y2 = y * y;  // computed once so +-y pairs share the factor
      const cplx w2 = ctx.w_pow(2);
      const cplx wm2 = ctx.w_pow(-2);
      const cplx d1 = 1.0 - wm2 * y2;
      const cplx d2 = 1.0 + w2 * y2;
      if (std::abs(d1) < kPoleGuard || std::abs(d2) < kPoleGuard)
        throw Error(ErrorKind::singular_roots, "root on a pole of the open Bethe equation");
      return sign * (1.0 - w2 * y2) / d1 * (1.0 + wm2 * y2) / d2 * ipow(base, 2 * L);
    }
    case BoundaryKind::braided: {
      const bool inf = family == 1 ? spec.braid.z1_infinite : spec.braid.z2_infinite;
      const cplx b = inf ? -kI / w : cplx{1.0};
      const cplx c = inf ? kI / w : cplx{1.0};
      return sign * ipow(b / c, L) * ipow(base, L);
    }
    case BoundaryKind::twisted:
      break;
  }
  throw Error(ErrorKind::not_applicable, "no Bethe equations for twisted chains");
}

cplx bethe_rhs(const RootContext& ctx, const std::vector<cplx>& roots, int j) {
  const cplx w2 = ctx.w_pow(2);
  const cplx wm2 = ctx.w_pow(-2);
  const cplx yj = roots[j];
  cplx r = 1.0;
  for (const cplx& yk : roots) {
    const cplx den = yk - wm2 * yj;
    if (std::abs(den) < kPoleGuard * std::max(1.0, std::abs(yj)))
      throw Error(ErrorKind::singular_roots, "roots collide with a Bethe-equation pole");
    r *= (yk - w2 * yj) / den;
  }
  return r;
}

}  // namespace

const char* to_string(CurveClass c) {
  switch (c) {
    case CurveClass::constant: return "constant";
    case CurveClass::ansatz: return "ansatz";
    case CurveClass::unresolved: return "unresolved";
  }
  return "unknown";
}

EigenvalueCurves::EigenvalueCurves(const ChainSpec& spec, std::uint64_t seed)
    : spec_(spec), r_(spec.ctx) {
  spec_.validate();
  PointSampler sampler(spec.n(), seed);
  std::vector<CMatrix> family;
  for (int k = 0; k < 3; ++k) family.push_back(transfer_t3(spec_, r_, sampler.mixed_radius_point()));
  if (has_aux_family(spec_)) {
    family.push_back(transfer_t2(spec_, sampler.scalar(1.1), AuxFamily::first));
    family.push_back(transfer_t2(spec_, sampler.scalar(0.9), AuxFamily::second));
  }
  basis_ = simultaneous_eigenbasis(family, seed);
  cluster_of_.assign(count(), 0);
  for (std::size_t c = 0; c < basis_.clusters.size(); ++c)
    for (int k = 0; k < basis_.clusters[c].size; ++k) cluster_of_[basis_.clusters[c].begin + k] = static_cast<int>(c);
}

std::vector<cplx> EigenvalueCurves::project(const CMatrix& t) const {
  std::vector<cplx> out(count());
  for (const Cluster& c : basis_.clusters) {
    const CMatrix block = basis_.vectors.middleCols(c.begin, c.size);
    const CMatrix reduced = block.adjoint() * t * block;
    if (c.size == 1) {
      out[c.begin] = reduced(0, 0);
      continue;
    }
    const cplx mean = reduced.trace() / static_cast<double>(c.size);
    for (int k = 0; k < c.size; ++k) out[c.begin + k] = mean;
  }
  return out;
}

std::vector<cplx> EigenvalueCurves::t3_values(const SpectralPoint& p) const {
  return project(transfer_t3(spec_, r_, p));
}

std::vector<cplx> EigenvalueCurves::t2_values(cplx z, AuxFamily family) const {
  return project(transfer_t2(spec_, z, family));
}

double EigenvalueCurves::projection_defect(const SpectralPoint& p) const {
  const CMatrix t = transfer_t3(spec_, r_, p);
  CMatrix d = basis_.vectors.adjoint() * t * basis_.vectors;
  double worst = 0.0;
  for (const Cluster& c : basis_.clusters) {
    CMatrix block = d.block(c.begin, c.begin, c.size, c.size);
    const cplx mean = block.trace() / static_cast<double>(c.size);
    block -= mean * CMatrix::Identity(c.size, c.size);
    worst = std::max(worst, block.norm());
  }
  // weight outside the cluster blocks
  for (const Cluster& c : basis_.clusters) d.block(c.begin, c.begin, c.size, c.size).setZero();
  worst = std::max(worst, d.norm());
  const double nt = t.norm();
  return nt > 0.0 ? worst / nt : worst;
}

int ansatz_degree_bound(const ChainSpec& spec) {
  const int per_site = spec.ctx.half();
  return spec.sites * per_site * (spec.boundary == BoundaryKind::open ? 2 : 1);
}

std::vector<BetheRoots> fit_ansatz(const EigenvalueCurves& curves, std::uint64_t seed) {
  const ChainSpec& spec = curves.spec();
  const int bound = ansatz_degree_bound(spec);
  const int m = bound + 3;
  const std::vector<cplx> nodes = circle_nodes(m, 1.0, 0.31);
  const int count = curves.count();
  const cplx w = spec.ctx.w();

  // samples[f][k][s]: fit f (z1 at kFixedZ2, z1 at kFixedZ2Alt, z2 at kFixedZ1, z2 at kFixedZ1Alt)
  const SpectralPoint reference{kFixedZ1, kFixedZ2};
  auto point_for = [&](int f, int k) -> SpectralPoint {
    switch (f) {
      case 0: return {nodes[k], kFixedZ2};
      case 1: return {nodes[k], kFixedZ2Alt};
      case 2: return {kFixedZ1, nodes[k]};
      default: return {kFixedZ1Alt, nodes[k]};
    }
  };
  const auto flat = kernels::sweep(static_cast<std::size_t>(4 * m),
                                   [&](std::size_t idx) { return curves.t3_values(point_for(static_cast<int>(idx) / m, static_cast<int>(idx) % m)); });

  PointSampler sampler(spec.n(), seed ^ 0x9e3779b97f4a7c15ULL);
  std::vector<SpectralPoint> fresh;
  for (int k = 0; k < 5; ++k) fresh.push_back(sampler.mixed_radius_point());
  const auto fresh_values = kernels::sweep(fresh.size(), [&](std::size_t k) { return curves.t3_values(fresh[k]); });
  const std::vector<cplx> ref_values = curves.t3_values(reference);

  std::vector<BetheRoots> out(count);
  for (int s = 0; s < count; ++s) {
    PolyFit fits[4];
    for (int f = 0; f < 4; ++f) {
      std::vector<cplx> vals(m);
      for (int k = 0; k < m; ++k) vals[k] = flat[f * m + k][s];
      fits[f] = poly_fit_roots(nodes, vals, bound);
    }
    BetheRoots& b = out[s];
    b.degree1 = fits[0].degree;
    b.degree2 = fits[2].degree;
    for (const cplx& r : fits[0].roots) b.y1.push_back(r / (kI * w));
    for (const cplx& r : fits[2].roots) b.y2.push_back(std::conj(kI * w * r));
    b.fit_residual = std::max({fits[0].residual, fits[1].residual, fits[2].residual, fits[3].residual});
    b.factorization_residual =
        std::max(root_set_distance(fits[0].roots, fits[1].roots), root_set_distance(fits[2].roots, fits[3].roots));

    auto shape = [&](const SpectralPoint& p) {
      cplx v = 1.0;
      for (const cplx& r : fits[0].roots) v *= p.z1 - r;
      for (const cplx& r : fits[2].roots) v *= p.z2 - r;
      return v;
    };
    const cplx ref_shape = shape(reference);
    b.constant = std::abs(ref_shape) > 0.0 ? ref_values[s] / ref_shape : cplx{};
    double scale = 0.0;
    double worst = 0.0;
    for (std::size_t k = 0; k < fresh.size(); ++k) {
      scale = std::max(scale, std::abs(fresh_values[k][s]));
      worst = std::max(worst, std::abs(fresh_values[k][s] - b.constant * shape(fresh[k])));
    }
    b.reconstruction_residual = scale > 0.0 ? worst / scale : worst;

    const bool fits_ok = b.fit_residual <= 1e-6 && b.reconstruction_residual <= 1e-7;
    if (!fits_ok)
      b.classification = CurveClass::unresolved;
    else
      b.classification = (b.degree1 == 0 && b.degree2 == 0) ? CurveClass::constant : CurveClass::ansatz;
  }
  return out;
}

cplx bethe_ratio(const ChainSpec& spec, const std::vector<cplx>& roots, int j, int family) {
  return bethe_lhs(spec, roots[j], family) / bethe_rhs(spec.ctx, roots, j);
}

double bethe_residual(const ChainSpec& spec, const std::vector<cplx>& roots, int family) {
  if (family != 1 && family != 2) throw Error(ErrorKind::invalid_spec, "Bethe family must be 1 or 2");
  double worst = 0.0;
  for (std::size_t j = 0; j < roots.size(); ++j) {
    if (std::abs(roots[j]) < kZeroRoot) continue;
    const cplx lhs = bethe_lhs(spec, roots[j], family);
    const cplx rhs = bethe_rhs(spec.ctx, roots, static_cast<int>(j));
    worst = std::max(worst, std::abs(lhs - rhs) / (std::abs(lhs) + std::abs(rhs) + 1.0));
  }
  return worst;
}

cplx residue_ratio(const EigenvalueCurves& curves, int curve, AuxFamily family, cplx zero, cplx fixed, double radius,
                   int nodes) {
  const bool first = family == AuxFamily::first;
  cplx ia = 0.0;
  cplx ib = 0.0;
  for (int k = 0; k < nodes; ++k) {
    const cplx e = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / nodes);
    const cplx z = zero + radius * e;
    const SpectralPoint p = first ? SpectralPoint{z, fixed} : SpectralPoint{fixed, z};
    const FunctionalRelation rel = functional_relation(curves.spec(), p, family);
    const cplx lam = curves.t3_values(p)[curve];
    const cplx la = curves.t3_values(rel.point_a)[curve];
    const cplx lb = curves.t3_values(rel.point_b)[curve];
    const cplx dz = kI * radius * e;  // per unit angle; the common 2 pi / nodes cancels
    ia += rel.coeff_a * la / lam * dz;
    ib += rel.coeff_b * lb / lam * dz;
  }
  return -ia / ib;
}

int BetheReport::count(CurveClass c) const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(), [c](const BetheEntry& e) { return e.roots.classification == c; }));
}

bool BetheReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [this](const BetheEntry& e) {
    return e.roots.classification == CurveClass::unresolved || (e.bethe1 < tol && e.bethe2 < tol);
  });
}

BetheReport bethe_report(const ChainSpec& spec, std::uint64_t seed, double tol) {
  if (spec.boundary == BoundaryKind::twisted)
    throw Error(ErrorKind::not_applicable, "Bethe equations are provided for periodic, open and braided chains");
  const EigenvalueCurves curves(spec, seed);
  const std::vector<BetheRoots> roots = fit_ansatz(curves, seed);

  BetheReport report(spec);
  report.seed = seed;
  report.tol = tol;
  report.degree_bound = ansatz_degree_bound(spec);
  report.basis_resolved = curves.resolved();
  report.basis_residual = curves.basis().max_offdiag_residual;

  // Functional relation in eigenvalue form at two admissible points per family.
  PointSampler sampler(spec.n(), seed + 1);
  struct Probe {
    SpectralPoint p;
    AuxFamily family;
  };
  std::vector<Probe> probes;
  for (AuxFamily fam : {AuxFamily::first, AuxFamily::second}) {
    int found = 0;
    while (found < 2) {
      const SpectralPoint p = sampler.point(1.1, 0.9);
      if (!fusion_point_admissible(spec, p, fam)) continue;
      probes.push_back({p, fam});
      ++found;
    }
  }
  struct ProbeValues {
    std::vector<cplx> lambda2, lambda3, a, b;
    FunctionalRelation rel;
  };
  const auto probe_values = kernels::sweep(probes.size(), [&](std::size_t k) {
    const FunctionalRelation rel = functional_relation(spec, probes[k].p, probes[k].family);
    return ProbeValues{curves.t2_values(rel.aux_argument, probes[k].family), curves.t3_values(probes[k].p),
                       curves.t3_values(rel.point_a), curves.t3_values(rel.point_b), rel};
  });

  report.entries = kernels::sweep(roots.size(), [&](std::size_t s) {
    BetheEntry e;
    e.index = static_cast<int>(s);
    e.cluster = curves.cluster_of()[s];
    e.roots = roots[s];
    for (const ProbeValues& v : probe_values) {
      const cplx lhs = v.lambda2[s] * v.lambda3[s];
      const cplx rhs = v.rel.coeff_a * v.a[s] + v.rel.coeff_b * v.b[s];
      e.functional = std::max(e.functional, std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1.0}));
    }
    if (e.roots.classification == CurveClass::unresolved) return e;
    try {
      e.bethe1 = bethe_residual(spec, e.roots.y1, 1);
      e.bethe2 = bethe_residual(spec, e.roots.y2, 2);
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::singular_roots) throw;
      e.roots.classification = CurveClass::unresolved;
      return e;
    }
    const cplx w = spec.ctx.w();
    for (const cplx& y : e.roots.y1) {
      if (std::abs(y) < kZeroRoot) continue;
      const cplx q = residue_ratio(curves, e.index, AuxFamily::first, kI * w * y, kFixedZ2);
      e.residue = std::max(e.residue, std::abs(q - 1.0));
    }
    for (const cplx& y : e.roots.y2) {
      if (std::abs(y) < kZeroRoot) continue;
      const cplx q = residue_ratio(curves, e.index, AuxFamily::second, -kI * std::conj(y) / w, kFixedZ1);
      e.residue = std::max(e.residue, std::abs(q - 1.0));
    }
    return e;
  });
  return report;
}

}  // namespace fzddn

#include "fzddn/report/suites.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "fzddn/chain/hamiltonian.hpp"
#include "fzddn/core/error.hpp"
#include "fzddn/core/linalg.hpp"
#include "fzddn/core/sampling.hpp"
#include "fzddn/core/tensor.hpp"
#include "fzddn/dihedral/double.hpp"
#include "fzddn/fz/projectors.hpp"
#include "fzddn/fz/rmatrix.hpp"
#include "fzddn/kernels/sweep.hpp"
#include "fzddn/transfer/fusion.hpp"
#include "fzddn/transfer/lax.hpp"

namespace fzddn {
namespace {

double tol_or(const SuiteParams& p, double fallback) { return p.tol > 0.0 ? p.tol : fallback; }

double max_of(const std::vector<double>& v) { return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end()); }

CMatrix on3(const CMatrix& op, int i, int j, int n) {
  const int dims[] = {n, n, n};
  const int sites[] = {i, j};
  return embed(op, sites, dims);
}

// ||R12(x) R13(xy) R23(y) - R23(y) R13(xy) R12(x)|| / ||lhs||
double ybe_residual(const CMatrix& rx, const CMatrix& rxy, const CMatrix& ry, int n) {
  const CMatrix a = on3(rx, 1, 2, n);
  const CMatrix b = on3(rxy, 1, 3, n);
  const CMatrix c = on3(ry, 2, 3, n);
  return relative_difference(a * b * c, c * b * a);
}

struct NamedElement {
  std::string name;
  DoubleElement x;
};

std::vector<NamedElement> generators(int n) {
  const auto s = DihedralElement::sigma(n);
  const auto t = DihedralElement::tau(n);
  return {{"sigma", DoubleElement::group(s)},
          {"tau", DoubleElement::group(t)},
          {"tau*", DoubleElement::dual(t)},
          {"(sigma tau)*", DoubleElement::dual(group_compose(s, t))}};
}

double sparse_commutator(const CMatrix& h, const SparseCMatrix& s) {
  const CMatrix hs = h * s;
  const CMatrix sh = s * h;
  const double scale = h.norm() * s.norm();
  const double c = (hs - sh).norm();
  return scale > 0.0 ? c / scale : c;
}

std::string fmt(double v) {
  std::ostringstream s;
  s << std::setprecision(17) << v;
  return s.str();
}

}  // namespace

ChainSpec SuiteParams::chain() const {
  ChainSpec spec(context(), sites, boundary);
  spec.twist = parse_dihedral(twist, n);
  spec.braid = parse_braid_point(z0);
  spec.alpha1 = alpha1;
  spec.alpha2 = alpha2;
  spec.validate();
  return spec;
}

void SuiteParams::require_within_cap() const {
  long d = 1;
  for (int i = 0; i < sites; ++i) {
    d *= n;
    if (d > max_dimension)
      throw Error(ErrorKind::resource_limit, "n^L = " + std::to_string(n) + "^" + std::to_string(sites) +
                                                 " exceeds the cap " + std::to_string(max_dimension));
  }
}

Json SuiteParams::to_json() const {
  Json j;
  j["n"] = n;
  j["sites"] = sites;
  j["boundary"] = to_string(boundary);
  j["twist"] = twist;
  j["z0"] = z0;
  j["alpha1"] = alpha1;
  j["alpha2"] = alpha2;
  j["samples"] = samples;
  j["seed"] = seed;
  j["tol"] = tol;
  return j;
}

std::vector<std::string> suite_names() {
  return {"ybe", "projectors", "symmetry", "braid", "fusion", "unitarity", "hamiltonian", "transfer", "conjugacy"};
}

SuiteReport run_suite(const std::string& name, const SuiteParams& p) {
  if (name == "ybe") return suite_ybe(p);
  if (name == "projectors") return suite_projectors(p);
  if (name == "symmetry") return suite_symmetry(p);
  if (name == "braid") return suite_braid(p);
  if (name == "fusion") return suite_fusion(p);
  if (name == "unitarity") return suite_unitarity(p);
  if (name == "hamiltonian") return suite_hamiltonian(p);
  if (name == "transfer") return suite_transfer(p);
  if (name == "conjugacy") return suite_conjugacy(p);
  throw Error(ErrorKind::invalid_spec, "unknown suite '" + name + "'");
}

// ---------------------------------------------------------------------------

SuiteReport suite_ybe(const SuiteParams& p) {
  const RootContext ctx = p.context();
  const int n = ctx.n();
  SuiteReport rep{"ybe", p.to_json(), {}};
  PointSampler sampler(n, p.seed);
  std::vector<std::pair<SpectralPoint, SpectralPoint>> pairs;
  for (int k = 0; k < p.samples; ++k) pairs.push_back(sampler.product_safe_pair(1.0));
  const NormalizedRMatrix rn(ctx);

  const auto dd = kernels::sweep(pairs.size(), [&](std::size_t k) {
    const auto& [x, y] = pairs[k];
    return ybe_residual(rmatrix_dd(ctx, x), rmatrix_dd(ctx, x * y), rmatrix_dd(ctx, y), n);
  });
  rep.add("two_parameter_ybe", max_of(dd), tol_or(p, 1e-9));

  const auto nr = kernels::sweep(pairs.size(), [&](std::size_t k) {
    const auto& [x, y] = pairs[k];
    return ybe_residual(rn(x), rn(x * y), rn(y), n);
  });
  rep.add("normalized_ybe", max_of(nr), tol_or(p, 1e-9));

  const std::size_t few = std::min<std::size_t>(pairs.size(), 5);
  const auto raw = kernels::sweep(few, [&](std::size_t k) {
    const auto& [x, y] = pairs[k];
    return ybe_residual(limit_rmatrix_raw(ctx, x), limit_rmatrix_raw(ctx, x * y), limit_rmatrix_raw(ctx, y), n);
  });
  rep.add("raw_limit_ybe", max_of(raw), tol_or(p, 1e-9));

  const auto one = kernels::sweep(few, [&](std::size_t k) {
    const cplx x = pairs[k].first.z1;
    const cplx y = pairs[k].second.z1;
    if (near_root_locus(x * y, n)) return 0.0;
    return ybe_residual(rmatrix_dd(ctx, {x, x}), rmatrix_dd(ctx, {x * y, x * y}), rmatrix_dd(ctx, {y, y}), n);
  });
  rep.add("one_parameter_ybe", max_of(one), tol_or(p, 1e-9));

  // Checkerboard model: three rapidity pairs on the unit circle.
  std::vector<double> fz;
  for (std::size_t k = 0; k < few; ++k) {
    cplx r[6];
    for (;;) {
      for (auto& v : r) v = sampler.scalar();
      bool ok = true;
      // every ratio entering a weight must stay off the loci
      const cplx xs[3][2] = {{r[0], r[1]}, {r[2], r[3]}, {r[4], r[5]}};
      for (int a = 0; a < 3 && ok; ++a)
        for (int b = a + 1; b < 3 && ok; ++b)
          for (int i = 0; i < 2 && ok; ++i)
            for (int j = 0; j < 2 && ok; ++j) ok = !near_root_locus(xs[a][i] / xs[b][j], n, 1e-2);
      if (ok) break;
    }
    const CMatrix a = fz_rmatrix(ctx, r[0], r[1], r[2], r[3]);
    const CMatrix b = fz_rmatrix(ctx, r[0], r[1], r[4], r[5]);
    const CMatrix c = fz_rmatrix(ctx, r[2], r[3], r[4], r[5]);
    fz.push_back(ybe_residual(a, b, c, n));
  }
  rep.add("checkerboard_ybe", max_of(fz), tol_or(p, 1e-9));

  const auto [s, si] = basis_S(ctx);
  const CMatrix ss = kron(s, s);
  const CMatrix ssi = kron(si, si);
  rep.add("basis_S_inverse", (s * si - identity(n)).norm(), 1e-12);
  std::vector<double> orient;
  for (std::size_t k = 0; k < few; ++k) {
    const SpectralPoint x = pairs[k].first;
    orient.push_back(relative_difference(rmatrix_dd(ctx, x), ss * limit_rmatrix_raw(ctx, x) * ssi));
  }
  rep.add("basis_S_orientation", max_of(orient), tol_or(p, 1e-9));
  rep.add("normalized_polynomial", rn.polynomiality_defect(), 1e-8);
  return rep;
}

SuiteReport suite_unitarity(const SuiteParams& p) {
  const RootContext ctx = p.context();
  const int n = ctx.n();
  SuiteReport rep{"unitarity", p.to_json(), {}};
  const CMatrix perm = permutation_op(n);
  rep.add("regularity_dd", (rmatrix_dd(ctx, SpectralPoint::one()) - perm).norm(), 1e-12);
  rep.add("regularity_raw", (limit_rmatrix_raw(ctx, SpectralPoint::one()) - perm).norm(), 1e-12);
  const NormalizedRMatrix rn(ctx);
  rep.add("regularity_normalized", (rn(SpectralPoint::one()) - normalization_N(ctx, SpectralPoint::one()) * perm).norm(),
          1e-12);

  PointSampler sampler(n, p.seed);
  std::vector<SpectralPoint> pts;
  for (int k = 0; k < p.samples; ++k) pts.push_back(sampler.mixed_radius_point());

  struct Row {
    double unitarity, scale_ok, reversal, conjugation;
  };
  const auto rows = kernels::sweep(pts.size(), [&](std::size_t k) {
    const SpectralPoint z = pts[k];
    const CMatrix r = rmatrix_dd(ctx, z);
    const CMatrix r21inv = perm * rmatrix_dd(ctx, z.inverse()) * perm;
    const ScalarFit f = fit_identity_multiple(r * r21inv);
    const double finite = (std::isfinite(std::abs(f.scale)) && std::abs(f.scale) > 1e-12) ? 0.0 : 1.0;
    const double rev = relative_difference(limit_rmatrix_raw(ctx, {1.0 / z.z2, 1.0 / z.z1}),
                                           perm * limit_rmatrix_raw(ctx, z) * perm);
    const double conj = relative_difference(rmatrix_dd(ctx, z.conjugate_swap()), CMatrix(r.conjugate()));
    return Row{f.residual, finite, rev, conj};
  });
  double u = 0, fin = 0, rev = 0, conj = 0;
  for (const Row& r : rows) {
    u = std::max(u, r.unitarity);
    fin = std::max(fin, r.scale_ok);
    rev = std::max(rev, r.reversal);
    conj = std::max(conj, r.conjugation);
  }
  rep.add("unitarity_proportional", u, tol_or(p, 1e-9));
  rep.add_flag("unitarity_scale_finite", fin == 0.0);
  rep.add("reversal_raw", rev, tol_or(p, 1e-9));
  rep.add("conjugation_dd", conj, tol_or(p, 1e-9));

  // conservation: e_{a,b} (x) e_{c,d} may appear only when a + b = c + d mod n
  double stray = 0.0;
  const CMatrix r = rmatrix_dd(ctx, pts.front());
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if ((a + b - c - d) % n != 0) stray = std::max(stray, std::abs(r(a * n + c, b * n + d)));
  rep.add("conservation_rule", stray, 0.0);
  return rep;
}

SuiteReport suite_projectors(const SuiteParams& p) {
  const RootContext ctx = p.context();
  const int n = ctx.n();
  SuiteReport rep{"projectors", p.to_json(), {}};
  const auto pairs = admissible_pairs(n);
  rep.params["admissible_pairs"] = pairs.size();
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
  rep.add("idempotent", idem, 1e-12);
  rep.add("orthogonal", orth, 1e-12);
  rep.add("complete", (sum - identity(n * n)).norm(), 1e-12);
  const CMatrix doubled = 2.0 * proj.front();
  rep.add_flag("half_prefactor_required", (doubled * doubled - doubled).norm() > 1e-3);

  const CMatrix perm = permutation_op(n);
  PointSampler sampler(n, p.seed);
  std::vector<SpectralPoint> pts;
  for (int k = 0; k < p.samples; ++k) pts.push_back(sampler.mixed_radius_point());
  struct Row {
    double decomposition, factor;
  };
  const auto rows = kernels::sweep(pts.size(), [&](std::size_t k) {
    const CMatrix pr = perm * rmatrix_dd(ctx, pts[k]);
    CMatrix model = CMatrix::Zero(n * n, n * n);
    std::vector<cplx> measured;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      model += eigenfunction_f(ctx, pairs[i].first, pairs[i].second, pts[k]) * proj[i];
      measured.push_back((proj[i] * pr).trace() / proj[i].trace());
    }
    // z2-dependence through a - b only: measured f divided by its z1 factor
    double spread = 0.0;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        const int di = ((pairs[i].first - pairs[i].second) % n + n) % n;
        const int dj = ((pairs[j].first - pairs[j].second) % n + n) % n;
        if (di != dj) continue;
        const cplx gi = measured[i] / eigenfunction_f_z1(ctx, pairs[i].first, pairs[i].second, pts[k].z1);
        const cplx gj = measured[j] / eigenfunction_f_z1(ctx, pairs[j].first, pairs[j].second, pts[k].z1);
        spread = std::max(spread, std::abs(gi - gj) / std::max(1.0, std::abs(gi)));
      }
    return Row{relative_difference(pr, model), spread};
  });
  double dec = 0, fac = 0;
  for (const Row& r : rows) {
    dec = std::max(dec, r.decomposition);
    fac = std::max(fac, r.factor);
  }
  rep.add("decomposition", dec, tol_or(p, 1e-9));
  rep.add("z2_factor_depends_on_difference", fac, tol_or(p, 1e-9));
  double at_one = 0.0;
  for (const auto& [a, b] : pairs) at_one = std::max(at_one, std::abs(eigenfunction_f(ctx, a, b, SpectralPoint::one()) - 1.0));
  rep.add("f_at_identity", at_one, 1e-12);
  return rep;
}

SuiteReport suite_symmetry(const SuiteParams& p) {
  const RootContext ctx = p.context();
  const int n = ctx.n();
  p.require_within_cap();
  SuiteReport rep{"symmetry", p.to_json(), {}};
  const auto gens = generators(n);
  const CMatrix perm = permutation_op(n);

  PointSampler sampler(n, p.seed);
  std::vector<SpectralPoint> pts;
  for (int k = 0; k < p.samples; ++k) pts.push_back(sampler.mixed_radius_point());
  for (const auto& g : gens) {
    const CMatrix d = coproduct_power(ctx, g.x, 2);
    const auto res = kernels::sweep(pts.size(), [&](std::size_t k) { return commutator_residual(perm * rmatrix_dd(ctx, pts[k]), d); });
    rep.add("intertwine " + g.name, max_of(res), tol_or(p, 1e-10));
  }

  // canonical element: constant YBE and R Delta(a) = Delta^T(a) R on all 4n basis generators
  const CMatrix rc = canonical_R(ctx);
  rep.add("canonical_ybe", ybe_residual(rc, rc, rc, n), 1e-12);
  double inter = 0.0;
  for (const auto& g : dihedral_elements(n))
    for (const DoubleElement& a : {DoubleElement::group(g), DoubleElement::dual(g)}) {
      const CMatrix d = coproduct_power(ctx, a, 2);
      inter = std::max(inter, (rc * d - perm * d * perm * rc).norm());
    }
  rep.add("canonical_intertwines", inter, 1e-12);

  const CMatrix h = local_h(ctx, p.alpha1, p.alpha2);
  double local = 0.0;
  for (const auto& g : gens) {
    const CMatrix d = coproduct_power(ctx, g.x, 2);
    local = std::max({local, commutator_residual(h, d), commutator_residual(perm * h * perm, d)});
  }
  rep.add("local_h_coproduct", local, tol_or(p, 1e-10));

  const int L = p.sites;
  auto invariance = [&](const ChainSpec& spec, const std::string& label) {
    const CMatrix H = global_hamiltonian(spec);
    double worst = 0.0;
    for (const auto& g : gens) worst = std::max(worst, sparse_commutator(H, coproduct_power_sparse(ctx, g.x, L)));
    rep.add(label, worst, tol_or(p, 1e-10));
  };
  ChainSpec open(ctx, L, BoundaryKind::open);
  open.alpha1 = p.alpha1;
  open.alpha2 = p.alpha2;
  invariance(open, "open_invariance");
  for (const BraidPoint& z0 : BraidPoint::all()) {
    ChainSpec br(ctx, L, BoundaryKind::braided);
    br.braid = z0;
    br.alpha1 = p.alpha1;
    br.alpha2 = p.alpha2;
    invariance(br, "braided_invariance " + z0.label());
  }

  ChainSpec per(ctx, L, BoundaryKind::periodic);
  per.alpha1 = p.alpha1;
  per.alpha2 = p.alpha2;
  const CMatrix H = global_hamiltonian(per);
  const auto cocomm = cocommutative_subspace(ctx);
  rep.params["cocommutative_dimension"] = cocomm.size();
  double cc = 0.0;
  for (const auto& x : cocomm) cc = std::max(cc, sparse_commutator(H, coproduct_power_sparse(ctx, x, L)));
  rep.add("periodic_cocommutative", cc, tol_or(p, 1e-10));

  // a witness outside the cocommutative subspace that breaks the symmetry
  std::string witness;
  double witness_residual = 0.0;
  for (const auto& h2 : dihedral_elements(n)) {
    const double r = sparse_commutator(H, coproduct_power_sparse(ctx, DoubleElement::dual(h2), L));
    if (r > witness_residual) {
      witness_residual = r;
      witness = h2.label() + "*";
    }
  }
  rep.params["periodic_witness_residual"] = witness_residual;
  if (H.norm() < 1e-12) {
    // a vanishing Hamiltonian commutes with everything; no witness can exist
    rep.params["periodic_witness"] = "none: periodic H vanishes";
  } else {
    rep.params["periodic_witness"] = witness;
    rep.add_flag("periodic_not_fully_symmetric", witness_residual > 1e-6);
  }
  return rep;
}

SuiteReport suite_braid(const SuiteParams& p) {
  const RootContext ctx = p.context();
  const int n = ctx.n();
  SuiteReport rep{"braid", p.to_json(), {}};
  const NormalizedRMatrix rn(ctx);
  const CMatrix id = identity(n);
  for (const BraidPoint& z0 : BraidPoint::all()) {
    const CMatrix b = braid_b(rn, z0);
    const CMatrix b1 = kron(b, id);
    const CMatrix b2 = kron(id, b);
    rep.add("braid_relation " + z0.label(), relative_difference(b1 * b2 * b1, b2 * b1 * b2), tol_or(p, 1e-12));
    const ScalarFit closure = fit_identity_multiple(braided_closure_factor(rn, z0));
    rep.add("closure_scalar " + z0.label(), closure.residual, 1e-12);
    rep.params["closure_factor " + z0.label()] = complex_json(closure.scale);
  }
  const CMatrix perm = permutation_op(n);
  const CMatrix b00 = braid_b(rn, {false, false});
  rep.add("canonical_element_form", (b00 - perm * canonical_R(ctx)).norm(), 1e-12);
  rep.add("closed_form (0,0)", (b00 - braid_b_displayed(ctx, {false, false})).norm(), 1e-12);
  const ScalarFit f = fit_proportional(braid_b(rn, {false, true}), braid_b_displayed(ctx, {false, true}));
  rep.add("closed_form (0,inf) up to scalar", f.residual, 1e-12);
  rep.params["closed_form (0,inf) scalar"] = complex_json(f.scale);
  const CMatrix idd = identity(n * n);
  rep.add("inverse (0,0)(inf,inf)", (b00 * braid_b(rn, {true, true}) - idd).norm(), 1e-12);
  rep.add("inverse (0,inf)(inf,0)", (braid_b(rn, {false, true}) * braid_b(rn, {true, false}) - idd).norm(), 1e-12);
  return rep;
}

SuiteReport suite_hamiltonian(const SuiteParams& p) {
  const RootContext ctx = p.context();
  const int n = ctx.n();
  p.require_within_cap();
  SuiteReport rep{"hamiltonian", p.to_json(), {}};
  const CMatrix h1 = h_component(ctx, 1);
  const CMatrix h2 = h_component(ctx, 2);
  const CMatrix perm = permutation_op(n);

  // central differences of the log-derivative at the identity point, where R = P = R^-1
  const double step = 1e-5;
  const CMatrix d1 = (rmatrix_dd(ctx, {1.0 + step, 1.0}) - rmatrix_dd(ctx, {1.0 - step, 1.0})) / (2 * step);
  const CMatrix d2 = (rmatrix_dd(ctx, {1.0, 1.0 + step}) - rmatrix_dd(ctx, {1.0, 1.0 - step})) / (2 * step);
  rep.add("h1_log_derivative", relative_difference(h1, kI * perm * d1), 1e-6);
  rep.add("h2_log_derivative", relative_difference(h2, -kI * perm * d2), 1e-6);
  rep.add("h2_is_PH1P", (perm * h1 * perm - h2).norm(), 1e-12);
  rep.add("h2_conjugate_is_h1", (CMatrix(h2.conjugate()) - h1).norm(), 1e-12);
  rep.add("h1_self_adjoint", (h1 - h1.adjoint()).norm(), 1e-12);
  rep.add("h1_traceless", std::abs(h1.trace()), 1e-12);
  rep.add("dihedral_sum_form", (local_h_dihedral_sum(ctx, p.alpha1, p.alpha2) - local_h(ctx, p.alpha1, p.alpha2)).norm(), 1e-12);
  rep.add("twisted_local_self_adjoint",
          hermiticity_defect(twisted_local_h(ctx, group_compose(DihedralElement::sigma(n), DihedralElement::tau(n)), p.alpha1, p.alpha2)),
          1e-12);

  std::vector<std::pair<std::string, ChainSpec>> chains;
  auto make = [&](BoundaryKind kind) {
    ChainSpec s(ctx, p.sites, kind);
    s.alpha1 = p.alpha1;
    s.alpha2 = p.alpha2;
    return s;
  };
  chains.emplace_back("periodic", make(BoundaryKind::periodic));
  ChainSpec tw = make(BoundaryKind::twisted);
  tw.twist = parse_dihedral(p.twist, n);
  chains.emplace_back("twisted " + tw.twist.label(), tw);
  chains.emplace_back("open", make(BoundaryKind::open));
  for (const BraidPoint& z0 : BraidPoint::all()) {
    ChainSpec b = make(BoundaryKind::braided);
    b.braid = z0;
    chains.emplace_back("braided " + z0.label(), b);
  }
  for (const auto& [label, spec] : chains) {
    const CMatrix H = global_hamiltonian(spec);
    rep.add("self_adjoint " + label, hermiticity_defect(H), tol_or(p, 1e-10));
    rep.add("traceless " + label, std::abs(H.trace()) / std::max(1.0, H.norm()), tol_or(p, 1e-10));
  }
  ChainSpec swapped = make(BoundaryKind::periodic);
  std::swap(swapped.alpha1, swapped.alpha2);
  rep.add("coupling_swap_is_conjugation",
          (CMatrix(global_hamiltonian(make(BoundaryKind::periodic)).conjugate()) - global_hamiltonian(swapped)).norm(), 1e-12);
  return rep;
}

SuiteReport suite_transfer(const SuiteParams& p) {
  const RootContext ctx = p.context();
  const int n = ctx.n();
  p.require_within_cap();
  SuiteReport rep{"transfer", p.to_json(), {}};
  const NormalizedRMatrix rn(ctx);
  PointSampler sampler(n, p.seed);

  std::vector<std::pair<std::string, ChainSpec>> chains;
  auto make = [&](BoundaryKind kind) {
    ChainSpec s(ctx, p.sites, kind);
    s.alpha1 = p.alpha1;
    s.alpha2 = p.alpha2;
    return s;
  };
  chains.emplace_back("periodic", make(BoundaryKind::periodic));
  ChainSpec tw = make(BoundaryKind::twisted);
  tw.twist = parse_dihedral(p.twist, n);
  chains.emplace_back("twisted " + tw.twist.label(), tw);
  chains.emplace_back("open", make(BoundaryKind::open));
  for (const BraidPoint& z0 : BraidPoint::all()) {
    ChainSpec b = make(BoundaryKind::braided);
    b.braid = z0;
    chains.emplace_back("braided " + z0.label(), b);
  }

  for (const auto& [label, spec] : chains) {
    std::vector<std::pair<SpectralPoint, SpectralPoint>> pairs;
    for (int k = 0; k < p.samples; ++k) pairs.emplace_back(sampler.mixed_radius_point(), sampler.mixed_radius_point());
    const auto res = kernels::sweep(pairs.size(), [&](std::size_t k) {
      return commutator_residual(transfer_t3(spec, rn, pairs[k].first), transfer_t3(spec, rn, pairs[k].second));
    });
    rep.add("commute " + label, max_of(res), tol_or(p, 1e-8));

    const CMatrix t1 = transfer_t3(spec, rn, SpectralPoint::one());
    const CMatrix H = global_hamiltonian(spec);
    rep.add("t(1) commutes with H " + label, commutator_residual(t1, H), tol_or(p, 1e-10));
    if (spec.boundary == BoundaryKind::open) {
      rep.add("t(1) scalar " + label, fit_identity_multiple(t1).residual, 1e-10);
    } else {
      rep.add("t(1) is translation " + label, fit_proportional(t1, translation_op(spec)).residual, 1e-10);
    }
    if (spec.boundary != BoundaryKind::twisted) {
      const auto t2 = kernels::sweep(pairs.size(), [&](std::size_t k) {
        const CMatrix t3 = transfer_t3(spec, rn, pairs[k].first);
        return std::max(commutator_residual(transfer_t2(spec, pairs[k].second.z1, AuxFamily::first), t3),
                        commutator_residual(transfer_t2(spec, pairs[k].second.z2, AuxFamily::second), t3));
      });
      rep.add("t2 commutes with t3 " + label, max_of(t2), tol_or(p, 1e-8));
    }
  }

  const ChainSpec per = make(BoundaryKind::periodic);
  const SpectralPoint z = sampler.mixed_radius_point();
  rep.add("periodic_conjugation",
          relative_difference(CMatrix(transfer_t3(per, rn, z).conjugate()), transfer_t3(per, rn, z.conjugate_swap())),
          tol_or(p, 1e-9));
  const CMatrix k = rep_g(ctx, tw.twist);
  const CMatrix kk = kron(k, k);
  const CMatrix r = rn(sampler.mixed_radius_point());
  rep.add("twist_intertwines_R", (r * kk - kk * r).norm() / r.norm(), 1e-12);
  return rep;
}

SuiteReport suite_conjugacy(const SuiteParams& p) {
  const RootContext ctx = p.context();
  p.require_within_cap();
  SuiteReport rep{"conjugacy", p.to_json(), {}};
  const DihedralElement g = parse_dihedral(p.twist, p.n);
  for (const auto& h : conjugacy_class(g)) {
    const ConjugacyComparison c = conjugacy_equivalence_check(ctx, p.sites, g, h, p.alpha1, p.alpha2);
    rep.add("spectrum " + g.label() + " vs " + h.label(), c.max_abs_difference, tol_or(p, 1e-8));
  }
  // different class: reported only
  const auto e = DihedralElement::identity(p.n);
  const ConjugacyComparison other = conjugacy_equivalence_check(ctx, p.sites, e, g, p.alpha1, p.alpha2);
  rep.params["other_class"] = e.label();
  rep.params["other_class_same_spectrum"] = other.equivalent;
  rep.params["other_class_difference"] = other.max_abs_difference;
  return rep;
}

SuiteReport fusion_for_chain(const SuiteParams& p) {
  p.require_within_cap();
  const ChainSpec spec = p.chain();
  if (spec.boundary == BoundaryKind::twisted)
    throw Error(ErrorKind::not_applicable, "functional relations are not provided for twisted chains");
  SuiteReport rep{"fusion", p.to_json(), {}};
  PointSampler sampler(p.n, p.seed);
  for (AuxFamily fam : {AuxFamily::first, AuxFamily::second}) {
    std::vector<SpectralPoint> pts;
    while (static_cast<int>(pts.size()) < p.samples) {
      const SpectralPoint z = sampler.mixed_radius_point();
      if (fusion_point_admissible(spec, z, fam)) pts.push_back(z);
    }
    const FusionReport f = fusion_sweep(spec, pts, fam, tol_or(p, 1e-7));
    rep.add("functional " + f.relation, f.max_residual(), f.tol);
  }
  return rep;
}

SuiteReport suite_fusion(const SuiteParams& p) {
  const RootContext ctx = p.context();
  const int n = ctx.n();
  SuiteReport rep{"fusion", p.to_json(), {}};
  PointSampler sampler(n, p.seed);

  // Lax-level identities
  std::vector<double> rel1, rel2, rel3, rel4, block;
  const NormalizedRMatrix rn(ctx);
  for (int k = 0; k < p.samples; ++k) {
    const SpectralPoint a = sampler.mixed_radius_point();
    const SpectralPoint b = sampler.mixed_radius_point();
    rel1.push_back(relation_rll(ctx, a.z1, b.z1));
    rel2.push_back(relation_limit_rll(ctx, a.z1, b.z1));
    rel3.push_back(relation_llr(ctx, a.z1, b.z1, b.z2));
    rel4.push_back(relation_conj_llr(ctx, a.z2, b.z1, b.z2));
    const BlockTriangularReport bt = block_triangular_check(rn, a);
    block.push_back(bt.upper_right);
    block.push_back(bt.top_left);
    block.push_back(bt.bottom_right);
  }
  rep.add("r L L", max_of(rel1), tol_or(p, 1e-9));
  rep.add("limit r L L*", max_of(rel2), tol_or(p, 1e-9));
  rep.add("L L R", max_of(rel3), tol_or(p, 1e-9));
  rep.add("L* L* R", max_of(rel4), tol_or(p, 1e-9));
  rep.add("block_triangular", max_of(block), tol_or(p, 1e-9));

  const auto [v, u] = fusion_vectors(ctx);
  const CMatrix id = identity(2 * n);
  rep.add("fusion_vectors_orthonormal", std::max((v.adjoint() * v - id).norm(), (u.adjoint() * u - id).norm()), 1e-12);
  const cplx z = sampler.scalar(1.3);
  CMatrix dl = CMatrix::Zero(2 * n, 2 * n);
  CMatrix dlp = CMatrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    dl(k, k) = -kI / ctx.w() * (z + kI);
    dl(n + k, n + k) = -kI / ctx.w() * (z - kI);
    dlp(k, k) = -kI * (z + kI);
    dlp(n + k, n + k) = kI * (z - kI);
  }
  rep.add("U^-1 L V diagonal", (u.adjoint() * l_op(ctx, z) * v - dl).norm(), 1e-12);
  rep.add("V^-1 L' U diagonal", (v.adjoint() * l_op_prime(ctx, z) * u - dlp).norm(), 1e-12);
  const ScalarFit inv = fit_identity_multiple(l_op_prime(ctx, z) * l_op(ctx, 1.0 / z));
  rep.add("L'(z) L(1/z) scalar", inv.residual, 1e-12);
  rep.add("L_bar(0) = L'(0)", (l_bar(ctx, false) - l_op_prime(ctx, 0.0)).norm(), 1e-12);
  rep.add("L_bar(inf) leading", (l_bar(ctx, true) - (l_op_prime(ctx, 1.0) - l_op_prime(ctx, 0.0))).norm(), 1e-12);

  // functional relations for every boundary class with a relation
  std::vector<SuiteParams> chains;
  SuiteParams q = p;
  q.boundary = BoundaryKind::periodic;
  chains.push_back(q);
  q.boundary = BoundaryKind::open;
  chains.push_back(q);
  for (const BraidPoint& z0 : BraidPoint::all()) {
    q.boundary = BoundaryKind::braided;
    q.z0 = z0.label();
    chains.push_back(q);
  }
  for (const SuiteParams& c : chains) rep.merge(fusion_for_chain(c));
  return rep;
}

SpectrumResult spectrum(const SuiteParams& p) {
  p.require_within_cap();
  const ChainSpec spec = p.chain();
  const RootContext& ctx = spec.ctx;
  const CMatrix H = global_hamiltonian(spec);
  SpectrumResult out;
  out.report.suite = "spectrum";
  out.report.params = p.to_json();
  out.report.add("self_adjoint", hermiticity_defect(H), tol_or(p, 1e-10));
  const HermitianEigen eig = eig_hermitian(H);
  out.values = eig.values;
  out.report.add("traceless", std::abs(out.values.sum()), 1e-9);

  const double scale = std::max(1.0, H.norm());
  if (spec.boundary == BoundaryKind::open || spec.boundary == BoundaryKind::braided) {
    double worst = 0.0;
    for (const auto& g : generators(ctx.n()))
      worst = std::max(worst, sparse_commutator(H, coproduct_power_sparse(ctx, g.x, spec.sites)));
    out.report.add("double_invariance", worst, tol_or(p, 1e-10));
  } else {
    const CMatrix t = translation_op(spec);
    out.report.add("commutes_with_translation", (H * t - t * H).norm() / scale, tol_or(p, 1e-10));
  }

  // degeneracy pattern
  Json pattern = Json::array();
  int run = 1;
  for (long k = 1; k <= out.values.size(); ++k) {
    if (k < out.values.size() && out.values[k] - out.values[k - 1] < 1e-8) {
      ++run;
      continue;
    }
    pattern.push_back(run);
    run = 1;
  }
  out.report.params["degeneracies"] = std::move(pattern);

  std::ostringstream csv;
  csv << "index,energy\n";
  for (long k = 0; k < out.values.size(); ++k) csv << k << "," << fmt(out.values[k]) << "\n";
  out.csv = csv.str();
  return out;
}

Json bethe_json(const BetheReport& r, const SuiteParams& p) {
  Json j;
  j["suite"] = "bethe";
  Json params = p.to_json();
  params["degree_bound"] = r.degree_bound;
  params["basis_resolved"] = r.basis_resolved;
  params["basis_residual"] = r.basis_residual;
  j["params"] = std::move(params);

  Json summary;
  summary["curves"] = r.entries.size();
  summary["constant"] = r.count(CurveClass::constant);
  summary["ansatz"] = r.count(CurveClass::ansatz);
  summary["unresolved"] = r.count(CurveClass::unresolved);
  j["summary"] = std::move(summary);

  Json checks = Json::array();
  Json eigen = Json::array();
  for (const BetheEntry& e : r.entries) {
    Json x;
    x["index"] = e.index;
    x["cluster"] = e.cluster;
    x["classification"] = to_string(e.roots.classification);
    x["d1"] = e.roots.degree1;
    x["d2"] = e.roots.degree2;
    Json y1 = Json::array(), y2 = Json::array();
    for (const cplx& y : e.roots.y1) y1.push_back(complex_json(y));
    for (const cplx& y : e.roots.y2) y2.push_back(complex_json(y));
    x["y1"] = std::move(y1);
    x["y2"] = std::move(y2);
    x["c"] = complex_json(e.roots.constant);
    x["fit_residual"] = e.roots.fit_residual;
    x["factorization_residual"] = e.roots.factorization_residual;
    x["reconstruction_residual"] = e.roots.reconstruction_residual;
    x["bethe_residual_1"] = e.bethe1;
    x["bethe_residual_2"] = e.bethe2;
    x["functional_residual"] = e.functional;
    x["residue_residual"] = e.residue;
    eigen.push_back(std::move(x));
    if (e.roots.classification == CurveClass::unresolved) continue;
    const double worst = std::max(e.bethe1, e.bethe2);
    Json c;
    c["name"] = "bethe curve " + std::to_string(e.index);
    c["residual"] = worst;
    c["tol"] = r.tol;
    c["pass"] = worst < r.tol;
    checks.push_back(std::move(c));
  }
  j["eigenvalues"] = std::move(eigen);
  j["checks"] = std::move(checks);
  j["pass"] = r.all_pass();
  return j;
}

std::vector<std::string> buildable_operators() {
  return {"rmatrix", "rmatrix-normalized", "rmatrix-raw", "permutation", "canonical", "h1", "h2", "local-h",
          "braid", "hamiltonian", "translation", "t3", "t2"};
}

MatrixDump build_operator(const std::string& op, const SuiteParams& p, cplx z1, cplx z2) {
  const RootContext ctx = p.context();
  const SpectralPoint z{z1, z2};
  MatrixDump d;
  d.metadata["op"] = op;
  d.metadata["params"] = p.to_json();
  d.metadata["z1"] = complex_json(z1);
  d.metadata["z2"] = complex_json(z2);
  if (op == "rmatrix") d.matrix = rmatrix_dd(ctx, z);
  else if (op == "rmatrix-normalized") d.matrix = NormalizedRMatrix(ctx)(z);
  else if (op == "rmatrix-raw") d.matrix = limit_rmatrix_raw(ctx, z);
  else if (op == "permutation") d.matrix = permutation_op(ctx.n());
  else if (op == "canonical") d.matrix = canonical_R(ctx);
  else if (op == "h1") d.matrix = h_component(ctx, 1);
  else if (op == "h2") d.matrix = h_component(ctx, 2);
  else if (op == "local-h") d.matrix = local_h(ctx, p.alpha1, p.alpha2);
  else if (op == "braid") d.matrix = braid_b(ctx, parse_braid_point(p.z0));
  else {
    p.require_within_cap();
    const ChainSpec spec = p.chain();
    if (op == "hamiltonian") d.matrix = global_hamiltonian(spec);
    else if (op == "translation") d.matrix = translation_op(spec);
    else if (op == "t3") d.matrix = transfer_t3(spec, z);
    else if (op == "t2") d.matrix = transfer_t2(spec, z1);
    else throw Error(ErrorKind::invalid_spec, "unknown operator '" + op + "'");
  }
  d.rows = d.matrix.rows();
  d.cols = d.matrix.cols();
  return d;
}

}  // namespace fzddn

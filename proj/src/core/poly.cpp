#include "fzddn/core/poly.hpp"

#include <algorithm>
#include <cmath>

#include "fzddn/core/error.hpp"

namespace fzddn {

cplx poly_eval(std::span<const cplx> coefficients, cplx z) {
  cplx acc{};
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * z + *it;
  return acc;
}

namespace {

cplx poly_derivative(std::span<const cplx> c, cplx z) {
  cplx acc{};
  for (std::size_t k = c.size(); k-- > 1;) acc = acc * z + static_cast<double>(k) * c[k];
  return acc;
}

}  // namespace

cplx polish_root(std::span<const cplx> coefficients, cplx root, double tol, int max_iter) {
  cplx z = root;
  double fz = std::abs(poly_eval(coefficients, z));
  for (int it = 0; it < max_iter && fz > 0.0; ++it) {
    const cplx d = poly_derivative(coefficients, z);
    if (d == cplx{}) break;
    cplx step = poly_eval(coefficients, z) / d;
    cplx trial = z - step;
    double ft = std::abs(poly_eval(coefficients, trial));
    for (int damp = 0; damp < 30 && ft > fz; ++damp) {
      step *= 0.5;
      trial = z - step;
      ft = std::abs(poly_eval(coefficients, trial));
    }
    if (ft > fz) break;
    z = trial;
    fz = ft;
    if (std::abs(step) <= tol * std::max(1.0, std::abs(z))) break;
  }
  return z;
}

PolyFit poly_fit_roots(std::span<const cplx> points, std::span<const cplx> values, int max_degree) {
  if (points.size() != values.size()) throw Error(ErrorKind::invalid_dimension, "points/values size mismatch");
  if (max_degree < 0) throw Error(ErrorKind::invalid_dimension, "negative degree");
  const long m = static_cast<long>(points.size());
  const long cols = max_degree + 1;

  long distinct = 0;
  for (long a = 0; a < m; ++a) {
    bool fresh = true;
    for (long b = 0; b < a && fresh; ++b)
      if (std::abs(points[a] - points[b]) < 1e-12) fresh = false;
    distinct += fresh ? 1 : 0;
  }
  if (distinct < max_degree + 2) throw Error(ErrorKind::insufficient_samples, "need max_degree + 2 distinct points");

  CMatrix vander(m, cols);
  CVector rhs(m);
  for (long r = 0; r < m; ++r) {
    cplx p = 1.0;
    for (long c = 0; c < cols; ++c) {
      vander(r, c) = p;
      p *= points[r];
    }
    rhs[r] = values[r];
  }
  Eigen::ColPivHouseholderQR<CMatrix> qr(vander);
  if (qr.rank() < cols) throw Error(ErrorKind::insufficient_samples, "rank-deficient sample set");
  const CVector sol = qr.solve(rhs);

  double cmax = 0.0;
  for (long c = 0; c < cols; ++c) cmax = std::max(cmax, std::abs(sol[c]));
  const double cut = 1e-8 * cmax;

  PolyFit fit;
  double vmax = 0.0;
  for (long r = 0; r < m; ++r) vmax = std::max(vmax, std::abs(values[r]));
  if (cmax == 0.0) {
    fit.coefficients = {cplx{}};
    fit.leading = {};
    fit.residual = 0.0;
    return fit;
  }

  long top = cols - 1;
  while (top > 0 && std::abs(sol[top]) < cut) --top;
  long low = 0;
  while (low < top && std::abs(sol[low]) < cut) ++low;

  fit.coefficients.assign(sol.data(), sol.data() + top + 1);
  for (long c = 0; c < low; ++c) fit.coefficients[c] = cplx{};
  fit.degree = static_cast<int>(top);
  fit.leading = fit.coefficients[top];

  fit.roots.assign(low, cplx{});
  const long reduced = top - low;
  if (reduced > 0) {
    // companion matrix of the monic polynomial sum_{k=low}^{top} c_k z^{k-low}
    CMatrix comp = CMatrix::Zero(reduced, reduced);
    for (long k = 1; k < reduced; ++k) comp(k, k - 1) = 1.0;
    for (long k = 0; k < reduced; ++k) comp(k, reduced - 1) = -sol[low + k] / sol[top];
    Eigen::ComplexEigenSolver<CMatrix> solver(comp);
    const std::span<const cplx> shifted(fit.coefficients.data() + low, reduced + 1);
    for (long k = 0; k < reduced; ++k) fit.roots.push_back(polish_root(shifted, solver.eigenvalues()[k]));
  }

  double worst = 0.0;
  for (long r = 0; r < m; ++r) worst = std::max(worst, std::abs(poly_eval(fit.coefficients, points[r]) - values[r]));
  fit.residual = vmax > 0.0 ? worst / vmax : worst;
  return fit;
}

}  // namespace fzddn

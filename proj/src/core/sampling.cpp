#include "fzddn/core/sampling.hpp"

#include <cmath>
#include <numbers>

namespace fzddn {

bool near_root_locus(cplx z, int n, double arc) {
  if (std::abs(z) == 0.0) return true;
  const double step = std::numbers::pi / n;  // 2n-th roots
  const double theta = std::arg(z);
  const double k = std::round(theta / step);
  return std::abs(theta - k * step) < 0.5 * arc;
}

bool near_root_locus(const SpectralPoint& p, int n, double arc) {
  return near_root_locus(p.z1, n, arc) || near_root_locus(p.z2, n, arc);
}

std::vector<cplx> circle_nodes(int m, double radius, double phase) {
  std::vector<cplx> out;
  out.reserve(m);
  for (int k = 0; k < m; ++k) out.push_back(std::polar(radius, 2.0 * std::numbers::pi * (k + phase) / m));
  return out;
}

cplx PointSampler::scalar(double radius) {
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
  for (;;) {
    const cplx z = std::polar(radius, angle(rng_));
    if (!near_root_locus(z, n_)) return z;
  }
}

SpectralPoint PointSampler::point(double radius1, double radius2) {
  const cplx a = scalar(radius1);
  const cplx b = scalar(radius2);
  return {a, b};
}

SpectralPoint PointSampler::mixed_radius_point() {
  static constexpr double radii[] = {0.5, 1.0, 2.0};
  std::uniform_int_distribution<int> pick(0, 2);
  const double r1 = radii[pick(rng_)];
  const double r2 = radii[pick(rng_)];
  return point(r1, r2);
}

std::pair<SpectralPoint, SpectralPoint> PointSampler::product_safe_pair(double radius) {
  for (;;) {
    const SpectralPoint x = point(radius, radius);
    const SpectralPoint y = point(radius, radius);
    if (!near_root_locus(x * y, n_)) return {x, y};
  }
}

}  // namespace fzddn

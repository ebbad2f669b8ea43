#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "fzddn/core/spectral_point.hpp"

namespace fzddn {

/// True when arg(z) lies within arc/2 of a 2n-th root of unity direction,
/// i.e. on the loci where the weight denominators can vanish.
bool near_root_locus(cplx z, int n, double arc = 1e-3);
bool near_root_locus(const SpectralPoint& p, int n, double arc = 1e-3);

/// m points radius * exp(2 pi i (k + phase) / m).
std::vector<cplx> circle_nodes(int m, double radius, double phase);

/// Seeded source of spectral points that stay off the root loci.
class PointSampler {
 public:
  PointSampler(int n, std::uint64_t seed) : n_(n), seed_(seed), rng_(seed) {}

  cplx scalar(double radius = 1.0);
  SpectralPoint point(double radius1 = 1.0, double radius2 = 1.0);
  /// Radius drawn from {0.5, 1, 2} independently per component.
  SpectralPoint mixed_radius_point();
  /// Pair (x, y) with x, y and x*y all off the loci.
  std::pair<SpectralPoint, SpectralPoint> product_safe_pair(double radius = 1.0);

  std::uint64_t seed() const { return seed_; }

 private:
  int n_;
  std::uint64_t seed_;
  std::mt19937_64 rng_;
};

}  // namespace fzddn

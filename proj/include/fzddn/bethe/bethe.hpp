#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fzddn/core/linalg.hpp"
#include "fzddn/transfer/fusion.hpp"

namespace fzddn {

/// Eigenvalue curves of t3 over a common eigenbasis of the chain's commuting
/// family (t3 at seeded points together with the two-dimensional auxiliary
/// transfer matrices where they exist). Curves inside a degenerate cluster
/// are sampled through the trace of the projected transfer matrix.
class EigenvalueCurves {
 public:
  EigenvalueCurves(const ChainSpec& spec, std::uint64_t seed = 0);

  const ChainSpec& spec() const { return spec_; }
  const NormalizedRMatrix& rmatrix() const { return r_; }
  int count() const { return static_cast<int>(basis_.vectors.cols()); }
  const SimultaneousBasis& basis() const { return basis_; }
  bool resolved() const { return basis_.resolved(); }
  /// Index of the cluster containing each curve.
  const std::vector<int>& cluster_of() const { return cluster_of_; }

  /// Lambda(p) for every curve.
  std::vector<cplx> t3_values(const SpectralPoint& p) const;
  /// lambda(z) of the auxiliary family for every curve.
  std::vector<cplx> t2_values(cplx z, AuxFamily family) const;
  /// Largest off-diagonal weight of V^dagger t3(p) V inside the clusters,
  /// relative to ||t3(p)||.
  double projection_defect(const SpectralPoint& p) const;

 private:
  std::vector<cplx> project(const CMatrix& t) const;

  ChainSpec spec_;
  NormalizedRMatrix r_;
  SimultaneousBasis basis_;
  std::vector<int> cluster_of_;
};

enum class CurveClass { constant, ansatz, unresolved };
const char* to_string(CurveClass c);

/// Ansatz data for one curve: Lambda = c prod (z1 - i w y1_k) prod (z2 + i w^-1 conj(y2_k)).
struct BetheRoots {
  int degree1 = 0;
  int degree2 = 0;
  std::vector<cplx> y1;
  std::vector<cplx> y2;
  cplx constant = 0.0;
  double fit_residual = 0.0;            // worst per-variable polynomial fit residual
  double factorization_residual = 0.0;  // root drift when the fixed variable changes
  double reconstruction_residual = 0.0; // at fresh points, relative to max |Lambda|
  CurveClass classification = CurveClass::unresolved;
};

/// Polynomial degree bound per variable: L (n-1)/2, doubled for open chains.
int ansatz_degree_bound(const ChainSpec& spec);

/// Fits every curve at once (all curves share the sample points).
std::vector<BetheRoots> fit_ansatz(const EigenvalueCurves& curves, std::uint64_t seed = 0);

/// max_j |LHS_j - RHS_j| / (|LHS_j| + |RHS_j| + 1) of the Bethe equations of
/// the chain's class for family a (1 or 2). Zero roots have no equation of
/// their own but enter every product. Throws singular-roots on pole collisions.
double bethe_residual(const ChainSpec& spec, const std::vector<cplx>& roots, int family);

/// Ratio LHS_j / RHS_j of the Bethe equation for one root.
cplx bethe_ratio(const ChainSpec& spec, const std::vector<cplx>& roots, int j, int family);

/// Residue form of the functional relation around the zero of the curve at
/// `zero` (in z1 for the first family, z2 for the second), from a contour
/// average of radius `radius`. Returns q = -oint A Lambda(p_A)/Lambda / oint B Lambda(p_B)/Lambda,
/// which equals 1 exactly when the Bethe equation for that root holds.
cplx residue_ratio(const EigenvalueCurves& curves, int curve, AuxFamily family, cplx zero, cplx fixed,
                   double radius = 1e-4, int nodes = 64);

struct BetheEntry {
  int index = 0;
  int cluster = 0;
  BetheRoots roots;
  double bethe1 = 0.0;
  double bethe2 = 0.0;
  double functional = 0.0;  // eigenvalue form of the functional relation, worst family
  double residue = 0.0;     // worst |q - 1| over nonzero first-family roots
};

struct BetheReport {
  explicit BetheReport(const ChainSpec& s) : spec(s) {}

  ChainSpec spec;
  std::uint64_t seed = 0;
  int degree_bound = 0;
  bool basis_resolved = false;
  double basis_residual = 0.0;
  std::vector<BetheEntry> entries;
  double tol = 1e-6;

  int count(CurveClass c) const;
  /// Every classified curve satisfies both families of Bethe equations.
  bool all_pass() const;
};

BetheReport bethe_report(const ChainSpec& spec, std::uint64_t seed = 0, double tol = 1e-6);

}  // namespace fzddn

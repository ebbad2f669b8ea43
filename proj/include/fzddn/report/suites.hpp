#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fzddn/bethe/bethe.hpp"
#include "fzddn/chain/spec.hpp"
#include "fzddn/report/report.hpp"

namespace fzddn {

/// Parameters shared by every suite and CLI command.
struct SuiteParams {
  int n = 3;
  int sites = 3;
  BoundaryKind boundary = BoundaryKind::periodic;
  std::string twist = "t^1";
  std::string z0 = "0,0";
  double alpha1 = 1.0;
  double alpha2 = -1.0;
  int samples = 10;
  std::uint64_t seed = 0;
  double tol = 0.0;  // > 0 overrides each suite's default identity tolerance
  long max_dimension = 4096;

  RootContext context() const { return RootContext(n); }
  ChainSpec chain() const;
  /// Throws resource-limit when n^sites exceeds max_dimension.
  void require_within_cap() const;
  Json to_json() const;
};

std::vector<std::string> suite_names();
/// Dispatches by name; unknown names throw invalid-spec.
SuiteReport run_suite(const std::string& name, const SuiteParams& p);

SuiteReport suite_ybe(const SuiteParams& p);
SuiteReport suite_unitarity(const SuiteParams& p);
SuiteReport suite_projectors(const SuiteParams& p);
SuiteReport suite_symmetry(const SuiteParams& p);
SuiteReport suite_braid(const SuiteParams& p);
SuiteReport suite_hamiltonian(const SuiteParams& p);
SuiteReport suite_transfer(const SuiteParams& p);
SuiteReport suite_conjugacy(const SuiteParams& p);
/// All boundary classes (periodic, open, braided at every z0) plus the
/// Lax-level identities.
SuiteReport suite_fusion(const SuiteParams& p);
/// Functional relations of the chain described by p only.
SuiteReport fusion_for_chain(const SuiteParams& p);

struct SpectrumResult {
  Eigen::VectorXd values;
  SuiteReport report;
  std::string csv;
};
SpectrumResult spectrum(const SuiteParams& p);

Json bethe_json(const BetheReport& r, const SuiteParams& p);

/// Operators available to `fzddn build`.
std::vector<std::string> buildable_operators();
MatrixDump build_operator(const std::string& op, const SuiteParams& p, cplx z1, cplx z2);

}  // namespace fzddn

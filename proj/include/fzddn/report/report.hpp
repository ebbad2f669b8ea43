#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fzddn/core/types.hpp"

namespace fzddn {

using Json = nlohmann::ordered_json;

struct Check {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// {suite, params, checks: [{name, residual, tol, pass}], pass}
struct SuiteReport {
  std::string suite;
  Json params = Json::object();
  std::vector<Check> checks;

  /// Records residual < tol (<= for exact zero tolerances).
  const Check& add(const std::string& name, double residual, double tol);
  /// Records a boolean outcome; residual is 0 on success and 1 otherwise.
  const Check& add_flag(const std::string& name, bool ok);
  void merge(const SuiteReport& other, const std::string& prefix = "");
  bool pass() const;
  Json to_json() const;
  std::string dump() const;  // two-space indented, trailing newline
};

/// Sparse-triplet matrix dump; entries sorted row-major, exact zeros omitted.
struct MatrixDump {
  long rows = 0;
  long cols = 0;
  Json metadata = Json::object();
  CMatrix matrix;

  Json to_json() const;
  std::string dump() const;
  static MatrixDump from_json(const Json& j);
  static MatrixDump parse(const std::string& text);
};

/// Writes text to path, or to stdout when path is empty or "-".
void write_text(const std::string& path, const std::string& text);
std::string read_text(const std::string& path);

/// JSON form of a complex number: [re, im].
Json complex_json(cplx z);

}  // namespace fzddn

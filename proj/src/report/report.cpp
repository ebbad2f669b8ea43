#include "fzddn/report/report.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "fzddn/core/error.hpp"

namespace fzddn {

const Check& SuiteReport::add(const std::string& name, double residual, double tol) {
  const bool ok = std::isfinite(residual) && (tol == 0.0 ? residual <= tol : residual < tol);
  checks.push_back({name, residual, tol, ok});
  return checks.back();
}

const Check& SuiteReport::add_flag(const std::string& name, bool ok) {
  checks.push_back({name, ok ? 0.0 : 1.0, 0.5, ok});
  return checks.back();
}

void SuiteReport::merge(const SuiteReport& other, const std::string& prefix) {
  for (const Check& c : other.checks) checks.push_back({prefix + c.name, c.residual, c.tol, c.pass});
}

bool SuiteReport::pass() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

Json SuiteReport::to_json() const {
  Json j;
  j["suite"] = suite;
  j["params"] = params;
  Json list = Json::array();
  for (const Check& c : checks) {
    Json e;
    e["name"] = c.name;
    e["residual"] = c.residual;
    e["tol"] = c.tol;
    e["pass"] = c.pass;
    list.push_back(std::move(e));
  }
  j["checks"] = std::move(list);
  j["pass"] = pass();
  return j;
}

std::string SuiteReport::dump() const { return to_json().dump(2) + "\n"; }

Json MatrixDump::to_json() const {
  Json j;
  j["dim"] = Json::array({rows, cols});
  Json entries = Json::array();
  // Row-major order regardless of Eigen's column-major storage.
  for (long r = 0; r < matrix.rows(); ++r)
    for (long c = 0; c < matrix.cols(); ++c) {
      const cplx v = matrix(r, c);
      if (v.real() == 0.0 && v.imag() == 0.0 && !std::signbit(v.real()) && !std::signbit(v.imag())) continue;
      entries.push_back(Json::array({r, c, v.real(), v.imag()}));
    }
  j["entries"] = std::move(entries);
  j["metadata"] = metadata;
  return j;
}

std::string MatrixDump::dump() const { return to_json().dump() + "\n"; }

MatrixDump MatrixDump::from_json(const Json& j) {
  MatrixDump d;
  try {
    d.rows = j.at("dim").at(0).get<long>();
    d.cols = j.at("dim").at(1).get<long>();
    if (d.rows < 0 || d.cols < 0) throw Error(ErrorKind::invalid_dimension, "negative matrix dimension");
    d.matrix = CMatrix::Zero(d.rows, d.cols);
    for (const auto& e : j.at("entries")) {
      const long r = e.at(0).get<long>();
      const long c = e.at(1).get<long>();
      if (r < 0 || c < 0 || r >= d.rows || c >= d.cols) throw Error(ErrorKind::invalid_dimension, "entry outside matrix");
      d.matrix(r, c) = cplx{e.at(2).get<double>(), e.at(3).get<double>()};
    }
    if (j.contains("metadata")) d.metadata = j.at("metadata");
  } catch (const Json::exception& ex) {
    throw Error(ErrorKind::invalid_spec, std::string("malformed matrix dump: ") + ex.what());
  }
  return d;
}

MatrixDump MatrixDump::parse(const std::string& text) {
  try {
    return from_json(Json::parse(text));
  } catch (const Json::parse_error& ex) {
    throw Error(ErrorKind::invalid_spec, std::string("malformed matrix dump: ") + ex.what());
  }
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::resource_limit, "cannot open '" + path + "' for writing");
  out << text;
  if (!out) throw Error(ErrorKind::resource_limit, "failed writing '" + path + "'");
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_spec, "cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

Json complex_json(cplx z) { return Json::array({z.real(), z.imag()}); }

}  // namespace fzddn

#include <cstdlib>
#include <iostream>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "fzddn/core/error.hpp"
#include "fzddn/report/suites.hpp"

namespace {

using namespace fzddn;

enum Exit { exit_pass = 0, exit_fail = 1, exit_usage = 2, exit_resource = 3 };

struct Options {
  SuiteParams p;
  std::string boundary = "periodic";
  std::string out = "-";
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--n", o.p.n, "Dihedral order (odd, >= 3)")->capture_default_str();
  cmd->add_option("--sites", o.p.sites, "Chain length L")->capture_default_str();
  cmd->add_option("--boundary", o.boundary, "periodic|twisted|open|braided")
      ->check(CLI::IsMember({"periodic", "twisted", "open", "braided"}))
      ->capture_default_str();
  cmd->add_option("--twist", o.p.twist, "Twist element, e.g. \"s^1 t^1\"")->capture_default_str();
  cmd->add_option("--alpha1", o.p.alpha1, "Coupling of H1")->capture_default_str();
  cmd->add_option("--alpha2", o.p.alpha2, "Coupling of H2")->capture_default_str();
  cmd->add_option("--z0", o.p.z0, "Braid point: 0,0 | 0,inf | inf,0 | inf,inf")->capture_default_str();
  cmd->add_option("--samples", o.p.samples, "Random points per check")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--seed", o.p.seed, "64-bit seed")->capture_default_str();
  cmd->add_option("--tol", o.p.tol, "Tolerance override (0 keeps per-check defaults)")->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", o.out, "Output path, - for stdout")->capture_default_str();
}

// "re", "re,im" or "inf"-free complex literal
cplx parse_complex(const std::string& text) {
  static const std::regex pair(R"(^\s*([^,]+?)\s*(?:,\s*([^,]+?)\s*)?$)");
  std::smatch m;
  if (!std::regex_match(text, m, pair)) throw Error(ErrorKind::invalid_point, "cannot parse complex '" + text + "'");
  try {
    std::size_t used = 0;
    const double re = std::stod(m[1].str(), &used);
    if (used != m[1].str().size()) throw std::invalid_argument("trailing");
    double im = 0.0;
    if (m[2].matched) {
      im = std::stod(m[2].str(), &used);
      if (used != m[2].str().size()) throw std::invalid_argument("trailing");
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::invalid_point, "cannot parse complex '" + text + "'");
  }
}

int exit_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::resource_limit:
      return exit_resource;
    case ErrorKind::singular_parameter:
    case ErrorKind::singular_roots:
    case ErrorKind::insufficient_samples:
      return exit_fail;
    default:
      return exit_usage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dihedral double spin chains: operators, invariants, spectra, fusion and Bethe checks"};
  app.require_subcommand(1);

  Options o;
  std::string suite;
  std::string op;
  std::string z1 = "1", z2 = "1";
  std::string report_path;

  auto* verify = app.add_subcommand("verify", "Run an invariant suite and write a JSON report");
  add_common(verify, o);
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  verify->add_option("--suite", suite, "Suite name")->required()->check(CLI::IsMember(suites));

  auto* build = app.add_subcommand("build", "Dump an operator as sparse-triplet JSON");
  add_common(build, o);
  build->add_option("--op", op, "Operator")->required()->check(CLI::IsMember(buildable_operators()));
  build->add_option("--z1", z1, "First spectral parameter, re[,im]")->capture_default_str();
  build->add_option("--z2", z2, "Second spectral parameter, re[,im]")->capture_default_str();

  auto* spec = app.add_subcommand("spectrum", "Diagonalize the global Hamiltonian; CSV to --out");
  add_common(spec, o);
  spec->add_option("--report", report_path, "Path for the JSON check report");

  auto* fusion = app.add_subcommand("fusion", "Check the functional relations of one chain");
  add_common(fusion, o);

  auto* bethe = app.add_subcommand("bethe", "Fit Bethe roots to every transfer eigenvalue curve");
  add_common(bethe, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_pass : exit_usage;
  }

  try {
    o.p.boundary = parse_boundary(o.boundary);
    o.p.context();  // validates n
    parse_dihedral(o.p.twist, o.p.n);
    parse_braid_point(o.p.z0);
    if (verify->parsed()) {
      SuiteReport rep;
      if (suite == "all") {
        rep.suite = "all";
        rep.params = o.p.to_json();
        for (const auto& name : suite_names()) rep.merge(run_suite(name, o.p), name + ": ");
      } else {
        rep = run_suite(suite, o.p);
      }
      write_text(o.out, rep.dump());
      return rep.pass() ? exit_pass : exit_fail;
    }
    if (build->parsed()) {
      const MatrixDump d = build_operator(op, o.p, parse_complex(z1), parse_complex(z2));
      write_text(o.out, d.dump());
      return exit_pass;
    }
    if (spec->parsed()) {
      const SpectrumResult r = spectrum(o.p);
      write_text(o.out, r.csv);
      if (!report_path.empty()) write_text(report_path, r.report.dump());
      return r.report.pass() ? exit_pass : exit_fail;
    }
    if (fusion->parsed()) {
      const SuiteReport rep = fusion_for_chain(o.p);
      write_text(o.out, rep.dump());
      return rep.pass() ? exit_pass : exit_fail;
    }
    if (bethe->parsed()) {
      o.p.require_within_cap();
      const BetheReport r = bethe_report(o.p.chain(), o.p.seed, o.p.tol > 0 ? o.p.tol : 1e-6);
      write_text(o.out, bethe_json(r, o.p).dump(2) + "\n");
      return r.all_pass() ? exit_pass : exit_fail;
    }
  } catch (const Error& e) {
    std::cerr << "fzddn: " << e.what() << "\n";
    return exit_for(e);
  } catch (const std::bad_alloc&) {
    std::cerr << "fzddn: out of memory\n";
    return exit_resource;
  } catch (const std::exception& e) {
    std::cerr << "fzddn: " << e.what() << "\n";
    return exit_fail;
  }
  return exit_usage;
}

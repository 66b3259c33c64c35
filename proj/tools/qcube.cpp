#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "qcube/bitlattice.hpp"
#include "qcube/chain.hpp"
#include "qcube/dicke.hpp"
#include "qcube/evolve.hpp"
#include "qcube/operators.hpp"
#include "qcube/polys.hpp"
#include "qcube/verify.hpp"

namespace {

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int cmd_verify(int n, double q, double tol, bool json) {
  const qcube::VerificationReport report = qcube::run_suite(n, q, tol);
  if (json) {
    std::cout << report.to_json() << "\n";
  } else {
    std::cout << "verification suite  n=" << n << "  q=" << fmt12(q) << "\n";
    for (const qcube::CheckResult& c : report.checks) {
      std::printf("%-26s max_error=%-14.6g tol=%-10.3g %s\n", c.name.c_str(), c.max_error,
                  c.tolerance, c.pass ? "pass" : "FAIL");
    }
    std::cout << "overall: " << (report.overall ? "pass" : "FAIL") << "\n";
  }
  return report.overall ? 0 : 1;
}

int cmd_graph(int n, double q, const std::string& format, const std::string& out_path) {
  qcube::GraphFormat fmt;
  if (format == "dot")
    fmt = qcube::GraphFormat::Dot;
  else if (format == "json")
    fmt = qcube::GraphFormat::Json;
  else if (format == "csv")
    fmt = qcube::GraphFormat::Csv;
  else
    throw CLI::ValidationError("--format", "expected dot|json|csv");

  const qcube::SparseOperator aq = qcube::build_Aq(n, qcube::DeformationParameter(q));
  if (out_path.empty()) {
    qcube::export_graph(aq, fmt, q, std::cout);
  } else {
    std::ofstream os(out_path);
    if (!os) throw CLI::ValidationError("--out", "cannot open output file");
    qcube::export_graph(aq, fmt, q, os);
  }
  return 0;
}

int cmd_dicke(int n, int weight, double q) {
  const std::vector<double> state =
      qcube::qdicke_direct(n, weight, qcube::DeformationParameter(q));
  qcube::print_state(state, n, std::cout);
  return 0;
}

int cmd_chain(int n, double q) {
  const qcube::DeformationParameter dq(q);
  const qcube::TridiagonalOperator h = qcube::build_Hq(n, dq);
  std::cout << "n,J_n\n";
  for (int i = 0; i < n; ++i) std::cout << i << "," << fmt12(h.couplings[i]) << "\n";
  const qcube::TridiagonalEigensystem eig = qcube::eigensystem(h);
  std::cout << "spectrum:";
  for (double v : eig.values) std::cout << " " << fmt12(v);
  std::cout << "\n";
  return 0;
}

int cmd_spectrum(int n, double q) {
  const qcube::DeformationParameter dq(q);
  const qcube::TridiagonalEigensystem eig = qcube::eigensystem(qcube::build_Hq(n, dq));
  std::cout << "k,eigenvalue\n";
  for (int k = 0; k <= n; ++k) std::cout << k << "," << fmt12(eig.values[k]) << "\n";
  return 0;
}

int cmd_wavefn(int n, double q) {
  const auto u = qcube::wavefunction_matrix(n, qcube::DeformationParameter(q));
  for (int row = 0; row <= n; ++row) {
    for (int k = 0; k <= n; ++k) {
      if (k) std::cout << " ";
      std::cout << fmt12(u[row][k]);
    }
    std::cout << "\n";
  }
  return 0;
}

int cmd_transfer(int n, double q, double t_max, int steps) {
  const auto series =
      qcube::fidelity_scan(n, qcube::DeformationParameter(q), t_max, steps);
  std::cout << "t,fidelity\n";
  for (const auto& [t, f] : series) std::cout << fmt12(t) << "," << fmt12(f) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"q-deformed hypercube toolkit: weighted adjacency operators, q-Dicke "
               "states, dual q-Krawtchouk chains and one-excitation dynamics"};
  app.require_subcommand(1);

  int n = 4;
  double q = 0.7;
  double tol = 1e-9;
  bool json = false;
  int weight = 0;
  std::string format = "dot";
  std::string out_path;
  double t_max = 10.0;
  int steps = 100;

  auto check_n = [](int value, int cap) {
    if (value < 1 || value > cap) throw CLI::ValidationError("--n", "out of range");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the identity verification suite");
  verify->add_option("--n", n, "number of sites");
  verify->add_option("--q", q, "deformation parameter");
  verify->add_option("--tol", tol, "tolerance scale (1e-9 = documented tolerances)");
  verify->add_flag("--json", json, "emit a JSON report");

  CLI::App* graph = app.add_subcommand("graph", "export the weighted q-cube");
  graph->add_option("--n", n, "number of sites");
  graph->add_option("--q", q, "deformation parameter");
  graph->add_option("--format", format, "dot|json|csv");
  graph->add_option("--out", out_path, "output path (default stdout)");

  CLI::App* dicke = app.add_subcommand("dicke", "print a q-Dicke state");
  dicke->add_option("--n", n, "number of sites");
  dicke->add_option("--weight", weight, "excitation number");
  dicke->add_option("--q", q, "deformation parameter");

  CLI::App* chain = app.add_subcommand("chain", "couplings and spectrum of H_q");
  chain->add_option("--n", n, "number of sites");
  chain->add_option("--q", q, "deformation parameter");

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues of H_q");
  spectrum->add_option("--n", n, "number of sites");
  spectrum->add_option("--q", q, "deformation parameter");

  CLI::App* wavefn = app.add_subcommand("wavefn", "dual q-Krawtchouk wavefunction table");
  wavefn->add_option("--n", n, "number of sites");
  wavefn->add_option("--q", q, "deformation parameter");

  CLI::App* transfer = app.add_subcommand("transfer", "transfer fidelity time series");
  transfer->add_option("--n", n, "number of sites");
  transfer->add_option("--q", q, "deformation parameter");
  transfer->add_option("--t-max", t_max, "scan end time");
  transfer->add_option("--steps", steps, "number of time steps");

  try {
    app.parse(argc, argv);

    if (verify->parsed()) {
      check_n(n, qcube::kSuiteMaxSites);
      return cmd_verify(n, q, tol, json);
    }
    check_n(n, qcube::kMaxSites);
    if (graph->parsed()) return cmd_graph(n, q, format, out_path);
    if (dicke->parsed()) return cmd_dicke(n, weight, q);
    if (chain->parsed()) return cmd_chain(n, q);
    if (spectrum->parsed()) return cmd_spectrum(n, q);
    if (wavefn->parsed()) return cmd_wavefn(n, q);
    if (transfer->parsed()) return cmd_transfer(n, q, t_max, steps);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "qcube/verify.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "qcube/bitlattice.hpp"
#include "qcube/chain.hpp"
#include "qcube/dicke.hpp"
#include "qcube/evolve.hpp"
#include "qcube/operators.hpp"
#include "qcube/polys.hpp"
#include "qcube/qnum.hpp"

namespace qcube {

namespace {

std::string format_12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

std::string VerificationReport::to_json() const {
  std::string out = "{\"n\":" + std::to_string(n) + ",\"q\":" + format_12(q) + ",\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (i) out += ",";
    out += "{\"name\":\"" + checks[i].name + "\",\"max_error\":" + format_12(checks[i].max_error) +
           ",\"tolerance\":" + format_12(checks[i].tolerance) +
           ",\"pass\":" + (checks[i].pass ? "true" : "false") + "}";
  }
  out += "],\"overall\":";
  out += overall ? "true" : "false";
  out += "}";
  return out;
}

VerificationReport run_suite(int num_sites, double q_value, double tol) {
  if (num_sites < 1 || num_sites > kSuiteMaxSites)
    throw std::invalid_argument("run_suite: need 1 <= N <= 14");
  if (!(q_value > 0)) throw std::invalid_argument("run_suite: need q > 0");
  if (!(tol > 0)) throw std::invalid_argument("run_suite: need tol > 0");

  const DeformationParameter q(q_value);
  const double scale = tol / 1e-9;  // documented tolerances correspond to tol = 1e-9
  VerificationReport report;
  report.n = num_sites;
  report.q = q_value;

  auto add = [&](const std::string& name, double max_error, double base_tol) {
    const double tolerance = base_tol * scale;
    report.checks.push_back({name, max_error, tolerance, max_error <= tolerance});
  };

  // Two routes to A_q.
  add("construction_equivalence", aq_construction_residual(num_sites, q), 1e-12);

  // q-Dicke states: lowering vs inversion-number form, and unit norms.
  double route_err = 0.0;
  double norm_err = 0.0;
  for (int n = 0; n <= num_sites; ++n) {
    const std::vector<double> direct = qdicke_direct(num_sites, n, q);
    const std::vector<double> lowered = qdicke_lowering(num_sites, n, q);
    double norm_sq = 0.0;
    for (std::size_t i = 0; i < direct.size(); ++i) {
      route_err = std::max(route_err, std::abs(direct[i] - lowered[i]));
      norm_sq += direct[i] * direct[i];
    }
    norm_err = std::max(norm_err, std::abs(std::sqrt(norm_sq) - 1.0));
  }
  add("dicke_route_equivalence", route_err, 1e-12);
  add("dicke_norm", norm_err, 1e-12);

  // Inversion statistic sums against the q-binomial.
  double inv_err = 0.0;
  for (int n = 0; n <= num_sites; ++n) {
    const double binom = q_binomial(num_sites, n, q);
    inv_err = std::max(inv_err, std::abs(inversion_sum(num_sites, n, q) - binom) / binom);
  }
  add("inversion_sum", inv_err, 1e-10);

  // Projection of A_q onto the q-Dicke basis.
  const ProjectionCheck proj = check_projection(num_sites, q);
  add("projection", proj.max_tridiagonal_error, 1e-10);
  add("projection_leakage", proj.max_leakage, 1e-12);

  // Wavefunction matrix: orthogonality and eigen-residuals.
  const SpectralReport spectral = spectral_verify(num_sites, q);
  add("orthogonality", spectral.max_orthogonality_error, 1e-9);
  add("eigen_residual", spectral.max_eigen_residual, 1e-9);

  // Dynamics: unitarity, and perfect state transfer in the classical limit.
  double unitarity_err = 0.0;
  std::vector<double> psi0(static_cast<std::size_t>(num_sites) + 1, 0.0);
  psi0[0] = 1.0;
  for (double t : {0.5, std::numbers::pi / 2, 10.0}) {
    const auto psi = evolve_state({num_sites, q, t}, psi0);
    double norm_sq = 0.0;
    for (const auto& c : psi) norm_sq += std::norm(c);
    unitarity_err = std::max(unitarity_err, std::abs(std::sqrt(norm_sq) - 1.0));
  }
  add("unitarity", unitarity_err, 1e-12);
  if (q_value == 1.0) {
    const double fidelity = transfer_fidelity(num_sites, q, std::numbers::pi / 2);
    add("pst_fidelity", std::abs(fidelity - 1.0), 1e-10);
  }

  report.overall = true;
  for (const CheckResult& c : report.checks) report.overall = report.overall && c.pass;
  return report;
}

}  // namespace qcube

#include "qcube/evolve.hpp"

#include <cmath>
#include <stdexcept>

#include "qcube/polys.hpp"

namespace qcube {

namespace {

std::vector<std::complex<double>> spectral_evolution(
    const std::vector<double>& eigenvalues, const std::vector<std::vector<double>>& columns,
    double t, std::span<const double> psi0) {
  const std::size_t size = eigenvalues.size();
  if (psi0.size() != size) throw std::invalid_argument("evolve_state: dimension mismatch");
  std::vector<std::complex<double>> psi(size, 0.0);
  for (std::size_t k = 0; k < size; ++k) {
    double overlap = 0.0;
    for (std::size_t n = 0; n < size; ++n) overlap += columns[k][n] * psi0[n];
    const std::complex<double> phase = std::polar(overlap, -eigenvalues[k] * t);
    for (std::size_t n = 0; n < size; ++n) psi[n] += phase * columns[k][n];
  }
  return psi;
}

}  // namespace

std::vector<std::complex<double>> evolve_state(const EvolutionSpec& spec,
                                               std::span<const double> psi0) {
  const int size = spec.num_sites + 1;
  const std::vector<std::vector<double>> u = wavefunction_matrix(spec.num_sites, spec.q);
  std::vector<double> eigenvalues(static_cast<std::size_t>(size));
  std::vector<std::vector<double>> columns(static_cast<std::size_t>(size),
                                           std::vector<double>(static_cast<std::size_t>(size)));
  for (int k = 0; k < size; ++k) {
    eigenvalues[k] = q_number(spec.num_sites - 2 * k, spec.q);
    for (int n = 0; n < size; ++n) columns[k][n] = u[n][k];
  }
  return spectral_evolution(eigenvalues, columns, spec.time, psi0);
}

std::vector<std::complex<double>> evolve_state_dense(const TridiagonalOperator& h, double t,
                                                     std::span<const double> psi0) {
  const TridiagonalEigensystem eig = eigensystem(h);
  return spectral_evolution(eig.values, eig.vectors, t, psi0);
}

double transfer_fidelity(int num_sites, DeformationParameter q, double t) {
  if (t < 0.0) throw std::invalid_argument("transfer_fidelity: t must be non-negative");
  std::vector<double> psi0(static_cast<std::size_t>(num_sites) + 1, 0.0);
  psi0[0] = 1.0;
  const std::vector<std::complex<double>> psi = evolve_state({num_sites, q, t}, psi0);
  return std::abs(psi[static_cast<std::size_t>(num_sites)]);
}

std::vector<std::pair<double, double>> fidelity_scan(int num_sites, DeformationParameter q,
                                                     double t_max, int steps) {
  if (steps < 1) throw std::invalid_argument("fidelity_scan: steps must be positive");
  std::vector<std::pair<double, double>> series;
  series.reserve(static_cast<std::size_t>(steps) + 1);
  for (int s = 0; s <= steps; ++s) {
    const double t = t_max * s / steps;
    series.emplace_back(t, transfer_fidelity(num_sites, q, t));
  }
  return series;
}

}  // namespace qcube

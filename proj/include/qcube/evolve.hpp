#ifndef QCUBE_EVOLVE_HPP
#define QCUBE_EVOLVE_HPP

#include <complex>
#include <span>
#include <vector>

#include "qcube/chain.hpp"
#include "qcube/qnum.hpp"

namespace qcube {

struct EvolutionSpec {
  int num_sites = 0;
  DeformationParameter q{1.0};
  double time = 0.0;
};

// psi(t) = sum_k exp(-i E_k t) <w_k|psi0> |w_k> using the dual q-Krawtchouk
// eigensystem; norm preserved to machine precision.
std::vector<std::complex<double>> evolve_state(const EvolutionSpec& spec,
                                               std::span<const double> psi0);

// Same evolution through the dense tridiagonal eigensolver; serves as the
// independent oracle for the spectral route.
std::vector<std::complex<double>> evolve_state_dense(const TridiagonalOperator& h, double t,
                                                     std::span<const double> psi0);

// |<N| exp(-i H_q t) |0>|.
double transfer_fidelity(int num_sites, DeformationParameter q, double t);

// Fidelity sampled on steps+1 uniform times in [0, t_max].
std::vector<std::pair<double, double>> fidelity_scan(int num_sites, DeformationParameter q,
                                                     double t_max, int steps);

}  // namespace qcube

#endif

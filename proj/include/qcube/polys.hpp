#ifndef QCUBE_POLYS_HPP
#define QCUBE_POLYS_HPP

#include <vector>

#include "qcube/qnum.hpp"

namespace qcube {

/// Parameters of the dual q-Krawtchouk family used here: c = -1, lattice size
/// ell = N, and the base the caller threads (the chain wavefunctions use q^2).
struct DualQKrawtchoukParams {
  double c = -1.0;
  int ell = 0;
  double base = 1.0;
};

// Terminating 3phi2 sum at the spectral point lambda(x) = base^{-x} +
// c * base^{x-ell}. Exact finite sum; the zero lower parameter contributes
// trivial factors.
double phi32_terminating(int n, int x, const DualQKrawtchoukParams& params);

// Orthonormalized wavefunction entry: square-root weight/norm factor applied
// to phi32_terminating. The radicand is checked positive before the root;
// a nonpositive value signals a convention fault and throws.
double normalized_dual_q_krawtchouk(int n, int x, const DualQKrawtchoukParams& params);

// (N+1)x(N+1) matrix U[n][k] = normalized wavefunction at base q^2, c = -1,
// ell = N. Column k is the H_q eigenvector with eigenvalue [N-2k]_q; each
// column's first nonzero entry is made positive.
std::vector<std::vector<double>> wavefunction_matrix(int num_sites, DeformationParameter q);

// Classical limit: 2^{-N/2} sqrt(C(N,n) C(N,k)) K_n(k; 1/2, N).
double krawtchouk_wavefunction(int n, int k, int num_sites);

struct SpectralReport {
  double max_eigen_residual = 0.0;       // ||H_q u_k - [N-2k]_q u_k||_inf
  double max_orthogonality_error = 0.0;  // ||U^T U - I||_max
  double max_recurrence_residual = 0.0;  // q = 1 three-term recurrence
};

SpectralReport spectral_verify(int num_sites, DeformationParameter q);

}  // namespace qcube

#endif

#ifndef QCUBE_CHAIN_HPP
#define QCUBE_CHAIN_HPP

#include <vector>

#include "qcube/dicke.hpp"
#include "qcube/operators.hpp"
#include "qcube/qnum.hpp"

namespace qcube {

/// One-excitation chain Hamiltonian: zero diagonal, symmetric couplings
/// J_0 ... J_{N-1} on the off-diagonals.
struct TridiagonalOperator {
  int size = 0;                   // N + 1
  std::vector<double> couplings;  // length N

  std::vector<std::vector<double>> dense() const;
};

// J_n = q^{n - N/2} sqrt(q [n+1]_q [N-n]_q); reduces to sqrt((n+1)(N-n)) at
// q = 1. Mirror-symmetric only in the classical limit.
double coupling(int num_sites, int n, DeformationParameter q);

TridiagonalOperator build_Hq(int num_sites, DeformationParameter q);

// Entries <D_q(m)| A_q |D_q(n)> over the full vertex space.
std::vector<std::vector<double>> project_Aq(const SparseOperator& aq, const DickeBasis& basis);

struct ProjectionCheck {
  double max_tridiagonal_error = 0.0;  // |projection - H_q| on the tridiagonal band
  double max_leakage = 0.0;            // magnitude outside the band
  double max_subspace_residual = 0.0;  // A_q column minus its span{n-1, n+1} part
};

ProjectionCheck check_projection(int num_sites, DeformationParameter q);

// The chain Hamiltonian sum (J_n/2)(sigma^x sigma^x + sigma^y sigma^y)
// restricted to the single spin-up states of the (N+1)-site chain, by direct
// matrix elements in the 2^{N+1} space. Must reproduce build_Hq; a mismatch
// beyond 1e-12 throws.
TridiagonalOperator single_excitation_restriction(int num_sites, DeformationParameter q);

// Dense symmetric-tridiagonal eigensystem (ascending eigenvalues, orthonormal
// columns), used as the independent spectral oracle.
struct TridiagonalEigensystem {
  std::vector<double> values;
  std::vector<std::vector<double>> vectors;  // vectors[k] is the k-th eigenvector
};

TridiagonalEigensystem eigensystem(const TridiagonalOperator& h);

}  // namespace qcube

#endif

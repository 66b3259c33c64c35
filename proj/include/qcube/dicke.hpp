#ifndef QCUBE_DICKE_HPP
#define QCUBE_DICKE_HPP

#include <iosfwd>
#include <vector>

#include "qcube/bitlattice.hpp"
#include "qcube/qnum.hpp"

namespace qcube {

/// q-Dicke state from the closed inversion-number formula: coefficient
/// q^{n(N-n)/2 - inv(x)} on every weight-n string x, normalized by the square
/// root of the symmetric q-binomial.
std::vector<double> qdicke_direct(int num_sites, int n, DeformationParameter q);

// Same state via (X^-)^n applied to |0...0>, normalized by [n]_q! and the
// q-binomial root. Disagreement with the direct form beyond 1e-12 per
// component throws: the two routes certify each other.
std::vector<double> qdicke_lowering(int num_sites, int n, DeformationParameter q);

struct DickeBasis {
  int num_sites = 0;
  double q = 1.0;
  std::vector<std::vector<double>> columns;  // n = 0 ... N
};

DickeBasis dicke_basis(int num_sites, DeformationParameter q);

// (bit string, coefficient) pairs sorted by index, 12 significant digits;
// zero components are skipped.
void print_state(const std::vector<double>& state, int num_sites, std::ostream& os);

}  // namespace qcube

#endif

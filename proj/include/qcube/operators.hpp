#ifndef QCUBE_OPERATORS_HPP
#define QCUBE_OPERATORS_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "qcube/bitlattice.hpp"
#include "qcube/qnum.hpp"

namespace qcube {

enum class Generator { SigmaPlus, SigmaMinus, QSigmaZ };

/// Real sparse operator on the 2^N vertex space, CSR storage.
struct SparseOperator {
  int num_sites = 0;
  std::size_t dim = 0;
  std::vector<std::size_t> row_ptr;
  std::vector<std::uint32_t> col;
  std::vector<double> val;

  std::size_t nonzeros() const { return val.size(); }
  double entry(std::uint32_t row, std::uint32_t column) const;

  // y = op * x; summation order per row is fixed by the CSR layout.
  void apply(std::span<const double> x, std::span<double> y) const;
};

// (N-1)-fold q-coproduct of a single-site generator in the N-fold tensor
// product: X^- , X^+ carry the k^{+-1/2} sandwich, K is (q^{sigma_z})^{(x)N}.
SparseOperator coproduct_power(Generator g, int num_sites, DeformationParameter q);

// Weighted adjacency operator of the q-cube. Built from the explicit tensor
// sum; the twisted-primitive product (sqrt(q) X^- + q^{-1/2} X^+) K^{-1/2} is
// constructed alongside and entrywise agreement within 1e-12 is enforced.
SparseOperator build_Aq(int num_sites, DeformationParameter q);

// Max entrywise |tensor sum - twisted-primitive product| over the nonzeros
// of A_q; the operator identity behind the two constructions.
double aq_construction_residual(int num_sites, DeformationParameter q);

// Matrix-free A_q * x, for sizes where materializing entries is wasteful.
void apply_Aq(int num_sites, DeformationParameter q, std::span<const double> x,
              std::span<double> y);

// q^{i - N + 2 sum_{j>i} x_j} for vertices differing exactly at site i.
double edge_weight(const BitString& x, const BitString& y, DeformationParameter q);

// Classical hypercube adjacency and its dual (diagonal N - 2 weight(x)).
SparseOperator build_A(int num_sites);
SparseOperator build_Astar(int num_sites);

enum class GraphFormat { Dot, Json, Csv };

// Emits the undirected weighted graph, each edge once, vertices labeled by
// bit strings, weights at 12 significant digits. q is metadata for JSON.
void export_graph(const SparseOperator& op, GraphFormat format, double q, std::ostream& os);

}  // namespace qcube

#endif

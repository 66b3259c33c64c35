#include "qcube/chain.hpp"

#include <lapacke.h>

#include <cmath>
#include <stdexcept>

#include "qcube/kernels.hpp"

namespace qcube {

std::vector<std::vector<double>> TridiagonalOperator::dense() const {
  std::vector<std::vector<double>> m(static_cast<std::size_t>(size),
                                     std::vector<double>(static_cast<std::size_t>(size), 0.0));
  for (int n = 0; n + 1 < size; ++n) {
    m[n][n + 1] = couplings[n];
    m[n + 1][n] = couplings[n];
  }
  return m;
}

double coupling(int num_sites, int n, DeformationParameter q) {
  if (n < 0 || n >= num_sites) throw std::invalid_argument("coupling: need 0 <= n <= N-1");
  const double qq = q.value();
  return std::pow(qq, n - 0.5 * num_sites) *
         std::sqrt(qq * q_number(n + 1, q) * q_number(num_sites - n, q));
}

TridiagonalOperator build_Hq(int num_sites, DeformationParameter q) {
  if (num_sites < 1) throw std::invalid_argument("build_Hq: N must be positive");
  TridiagonalOperator h;
  h.size = num_sites + 1;
  h.couplings.reserve(static_cast<std::size_t>(num_sites));
  for (int n = 0; n < num_sites; ++n) h.couplings.push_back(coupling(num_sites, n, q));
  return h;
}

std::vector<std::vector<double>> project_Aq(const SparseOperator& aq, const DickeBasis& basis) {
  const std::size_t cols = basis.columns.size();
  if (aq.dim != (std::size_t{1} << basis.num_sites))
    throw std::invalid_argument("project_Aq: operator and basis dimensions differ");
  std::vector<std::vector<double>> proj(cols, std::vector<double>(cols, 0.0));
  std::vector<double> image(aq.dim);
  for (std::size_t n = 0; n < cols; ++n) {
    aq.apply(basis.columns[n], image);
    for (std::size_t m = 0; m < cols; ++m) {
      proj[m][n] = kernels::dot(basis.columns[m], image);
    }
  }
  return proj;
}

ProjectionCheck check_projection(int num_sites, DeformationParameter q) {
  const SparseOperator aq = build_Aq(num_sites, q);
  const DickeBasis basis = dicke_basis(num_sites, q);
  const TridiagonalOperator hq = build_Hq(num_sites, q);
  const std::vector<std::vector<double>> proj = project_Aq(aq, basis);

  ProjectionCheck check;
  const int size = num_sites + 1;
  for (int m = 0; m < size; ++m) {
    for (int n = 0; n < size; ++n) {
      double expected = 0.0;
      if (m == n + 1) expected = hq.couplings[n];
      if (n == m + 1) expected = hq.couplings[m];
      const double err = std::abs(proj[m][n] - expected);
      if (std::abs(m - n) == 1)
        check.max_tridiagonal_error = std::max(check.max_tridiagonal_error, err);
      else
        check.max_leakage = std::max(check.max_leakage, err);
    }
  }

  // Irreducibility: A_q |D_q(n)> minus its components along |D_q(n+-1)>.
  std::vector<double> image(aq.dim), residual(aq.dim);
  for (int n = 0; n < size; ++n) {
    aq.apply(basis.columns[n], image);
    residual = image;
    if (n > 0) kernels::axpy(-proj[n - 1][n], basis.columns[n - 1], residual);
    if (n + 1 < size) kernels::axpy(-proj[n + 1][n], basis.columns[n + 1], residual);
    for (double r : residual)
      check.max_subspace_residual = std::max(check.max_subspace_residual, std::abs(r));
  }
  return check;
}

TridiagonalOperator single_excitation_restriction(int num_sites, DeformationParameter q) {
  if (num_sites < 1 || num_sites + 1 > kMaxSites)
    throw std::invalid_argument("single_excitation_restriction: N out of range");
  const TridiagonalOperator hq = build_Hq(num_sites, q);
  const int size = num_sites + 1;  // chain sites 0 ... N

  // Single spin-up basis of the (N+1)-qubit chain: |n> has only bit n set.
  // Each bond term (J_p/2)(sigma^x sigma^x + sigma^y sigma^y) exchanges
  // 01 <-> 10 with amplitude J_p and kills aligned pairs.
  TridiagonalOperator restricted;
  restricted.size = size;
  restricted.couplings.assign(static_cast<std::size_t>(num_sites), 0.0);
  for (int n = 0; n < size; ++n) {
    const std::uint32_t state = 1u << n;
    for (int p = 0; p < num_sites; ++p) {
      const bool up_p = (state >> p) & 1u;
      const bool up_next = (state >> (p + 1)) & 1u;
      if (up_p == up_next) continue;
      const std::uint32_t hopped = state ^ (3u << p);
      // hopped is again a single spin-up state; locate it.
      for (int m = 0; m < size; ++m) {
        if (hopped == (1u << m) && m == n + 1) restricted.couplings[n] = hq.couplings[p];
      }
    }
  }
  for (int n = 0; n < num_sites; ++n) {
    if (std::abs(restricted.couplings[n] - hq.couplings[n]) > 1e-12)
      throw std::logic_error("single_excitation_restriction: mismatch with build_Hq");
  }
  return restricted;
}

TridiagonalEigensystem eigensystem(const TridiagonalOperator& h) {
  const int n = h.size;
  std::vector<double> diag(static_cast<std::size_t>(n), 0.0);
  std::vector<double> off(h.couplings);
  std::vector<double> z(static_cast<std::size_t>(n) * n);
  const int info =
      LAPACKE_dstev(LAPACK_ROW_MAJOR, 'V', n, diag.data(), off.data(), z.data(), n);
  if (info != 0) throw std::runtime_error("eigensystem: dstev failed");
  TridiagonalEigensystem eig;
  eig.values = std::move(diag);
  eig.vectors.assign(static_cast<std::size_t>(n), std::vector<double>(static_cast<std::size_t>(n)));
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) eig.vectors[k][i] = z[static_cast<std::size_t>(i) * n + k];
  return eig;
}

}  // namespace qcube

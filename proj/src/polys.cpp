#include "qcube/polys.hpp"

#include <quadmath.h>

#include <cmath>
#include <stdexcept>

#include "qcube/chain.hpp"

// The 3phi2 sums and their normalization lose up to 12 significant digits in
// double at the edges of the parameter range (N = 10, base 4), so every
// intermediate here is evaluated in __float128 and rounded once at the end.

namespace qcube {

namespace {

using quad = __float128;

quad ipow(quad base, int e) {
  if (e < 0) return quad(1) / ipow(base, -e);
  quad result = 1;
  quad b = base;
  while (e > 0) {
    if (e & 1) result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

quad poch(quad a, quad q, int n) {
  quad prod = 1;
  quad aq = a;
  for (int k = 0; k < n; ++k) {
    prod *= (quad(1) - aq);
    aq *= q;
  }
  return prod;
}

void check_args(int n, int x, const DualQKrawtchoukParams& p) {
  if (!(p.c < 0)) throw std::invalid_argument("dual q-Krawtchouk: c must be negative");
  if (!(p.base > 0)) throw std::invalid_argument("dual q-Krawtchouk: base must be positive");
  if (n < 0 || n > p.ell || x < 0 || x > p.ell)
    throw std::invalid_argument("dual q-Krawtchouk: need 0 <= n, x <= ell");
}

quad phi32_quad(int n, int x, quad c, int ell, quad bq) {
  const int jmax = std::min(n, x);
  quad sum = 0;
  for (int j = 0; j <= jmax; ++j) {
    const quad num = poch(ipow(bq, -n), bq, j) * poch(ipow(bq, -x), bq, j) *
                     poch(c * ipow(bq, x - ell), bq, j);
    const quad den = poch(bq, bq, j) * poch(ipow(bq, -ell), bq, j);
    sum += num / den * ipow(bq, j);
  }
  return sum;
}

quad hat_quad(int n, int x, quad c, int ell, quad bq) {
  const quad num = poch(c * ipow(bq, -ell), bq, x) * poch(ipow(bq, -ell), bq, x) *
                   (quad(1) - c * ipow(bq, 2 * x - ell)) * ipow(c, -x) *
                   ipow(bq, x * (2 * ell - x)) * poch(ipow(bq, -ell), bq, n);
  const quad den = poch(bq, bq, x) * poch(c * bq, bq, x) * (quad(1) - c * ipow(bq, -ell)) *
                   poch(quad(1) / c, bq, ell) * poch(bq, bq, n) * ipow(c * ipow(bq, -ell), n);
  const quad radicand = num / den;
  if (!(radicand > 0))
    throw std::runtime_error("normalized_dual_q_krawtchouk: nonpositive radicand");
  return sqrtq(radicand) * phi32_quad(n, x, c, ell, bq);
}

}  // namespace

double phi32_terminating(int n, int x, const DualQKrawtchoukParams& params) {
  check_args(n, x, params);
  return static_cast<double>(phi32_quad(n, x, quad(params.c), params.ell, quad(params.base)));
}

double normalized_dual_q_krawtchouk(int n, int x, const DualQKrawtchoukParams& params) {
  check_args(n, x, params);
  const double value =
      static_cast<double>(hat_quad(n, x, quad(params.c), params.ell, quad(params.base)));
  if (!std::isfinite(value))
    throw std::runtime_error("normalized_dual_q_krawtchouk: overflow in normalization");
  return value;
}

std::vector<std::vector<double>> wavefunction_matrix(int num_sites, DeformationParameter q) {
  const int size = num_sites + 1;
  const quad c = -1;
  const quad bq = quad(q.value()) * quad(q.value());
  std::vector<std::vector<double>> u(static_cast<std::size_t>(size),
                                     std::vector<double>(static_cast<std::size_t>(size)));
  // The normalization degenerates at base 1 ((q;q)_x vanishes); the classical
  // limit is the Krawtchouk matrix, whose column k keeps eigenvalue N - 2k.
  if (q.is_classical()) {
    for (int n = 0; n < size; ++n)
      for (int k = 0; k < size; ++k) u[n][k] = krawtchouk_wavefunction(n, k, num_sites);
    return u;
  }
  for (int n = 0; n < size; ++n)
    for (int k = 0; k < size; ++k)
      u[n][k] = static_cast<double>(hat_quad(n, k, c, num_sites, bq));

  // First nonzero entry of each column made positive; the square-root
  // normalization fixes columns only up to sign.
  for (int k = 0; k < size; ++k) {
    for (int n = 0; n < size; ++n) {
      if (u[n][k] != 0.0) {
        if (u[n][k] < 0.0)
          for (int m = 0; m < size; ++m) u[m][k] = -u[m][k];
        break;
      }
    }
  }
  return u;
}

double krawtchouk_wavefunction(int n, int k, int num_sites) {
  if (n < 0 || n > num_sites || k < 0 || k > num_sites)
    throw std::invalid_argument("krawtchouk_wavefunction: need 0 <= n, k <= N");
  // K_n(k; 1/2, N) = 2F1(-n, -k; -N; 2), terminating.
  long double sum = 0.0L;
  long double term = 1.0L;
  const int jmax = std::min(n, k);
  for (int j = 0; j <= jmax; ++j) {
    sum += term;
    if (j < jmax)
      term *= 2.0L * static_cast<long double>(-(n - j)) * static_cast<long double>(-(k - j)) /
              (static_cast<long double>(-(num_sites - j)) * (j + 1));
  }
  long double binom_product = 1.0L;
  for (int i = 1; i <= n; ++i)
    binom_product *= static_cast<long double>(num_sites - i + 1) / i;
  for (int i = 1; i <= k; ++i)
    binom_product *= static_cast<long double>(num_sites - i + 1) / i;
  return static_cast<double>(powl(2.0L, -0.5L * num_sites) * sqrtl(binom_product) * sum);
}

SpectralReport spectral_verify(int num_sites, DeformationParameter q) {
  SpectralReport report;
  const int size = num_sites + 1;
  const std::vector<std::vector<double>> u = wavefunction_matrix(num_sites, q);
  const TridiagonalOperator hq = build_Hq(num_sites, q);

  for (int k = 0; k < size; ++k) {
    const double eigenvalue = q_number(num_sites - 2 * k, q);
    for (int n = 0; n < size; ++n) {
      double hu = 0.0;
      if (n > 0) hu += hq.couplings[n - 1] * u[n - 1][k];
      if (n + 1 < size) hu += hq.couplings[n] * u[n + 1][k];
      report.max_eigen_residual =
          std::max(report.max_eigen_residual, std::abs(hu - eigenvalue * u[n][k]));
    }
  }

  for (int a = 0; a < size; ++a) {
    for (int b = 0; b < size; ++b) {
      double g = 0.0;
      for (int n = 0; n < size; ++n) g += u[n][a] * u[n][b];
      report.max_orthogonality_error =
          std::max(report.max_orthogonality_error, std::abs(g - (a == b ? 1.0 : 0.0)));
    }
  }

  // Classical three-term recurrence, checked on the q = 1 Krawtchouk matrix.
  const DeformationParameter one(1.0);
  for (int k = 0; k < size; ++k) {
    for (int n = 0; n < size; ++n) {
      double rhs = 0.0;
      if (n + 1 < size) rhs += coupling(num_sites, n, one) * krawtchouk_wavefunction(n + 1, k, num_sites);
      if (n > 0) rhs += coupling(num_sites, n - 1, one) * krawtchouk_wavefunction(n - 1, k, num_sites);
      const double lhs = (num_sites - 2.0 * k) * krawtchouk_wavefunction(n, k, num_sites);
      report.max_recurrence_residual =
          std::max(report.max_recurrence_residual, std::abs(lhs - rhs));
    }
  }
  return report;
}

}  // namespace qcube

#include "qcube/qnum.hpp"

#include <cmath>
#include <cstdlib>

namespace qcube {

double q_number(int x, DeformationParameter q) {
  if (x == 0) return 0.0;
  const int ax = std::abs(x);
  const double qq = q.value();
  double sum = 0.0;
  double term = std::pow(qq, ax - 1);
  const double step = 1.0 / (qq * qq);
  for (int k = 0; k < ax; ++k) {
    sum += term;
    term *= step;
  }
  return x > 0 ? sum : -sum;
}

double q_factorial(int n, DeformationParameter q) {
  if (n < 0) throw std::invalid_argument("q_factorial: n must be non-negative");
  double prod = 1.0;
  for (int i = 1; i <= n; ++i) prod *= q_number(i, q);
  return prod;
}

double q_binomial(int big_n, int n, DeformationParameter q) {
  if (n < 0 || n > big_n) throw std::invalid_argument("q_binomial: need 0 <= n <= N");
  // Ratio of climbing products, pairing [N-n+i]_q / [i]_q keeps magnitudes tame.
  double result = 1.0;
  const int k = std::min(n, big_n - n);
  for (int i = 1; i <= k; ++i) {
    result *= q_number(big_n - k + i, q) / q_number(i, q);
  }
  return result;
}

double q_pochhammer(double a, double q, int n) {
  if (n < 0) throw std::invalid_argument("q_pochhammer: n must be non-negative");
  double prod = 1.0;
  double aq = a;
  for (int k = 0; k < n; ++k) {
    prod *= (1.0 - aq);
    aq *= q;
  }
  return prod;
}

}  // namespace qcube

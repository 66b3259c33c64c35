#include "qcube/kernels.hpp"

#include <cassert>
#include <cmath>

namespace qcube::kernels::scalar {

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) sum += x[i] * y[i];
  return sum;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += a * x[i];
}

void scale(double a, std::span<double> x) {
  for (double& v : x) v *= a;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

}  // namespace qcube::kernels::scalar

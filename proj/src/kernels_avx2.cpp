// Compiled with -mavx2 -mfma; only reached after the runtime CPU check.
#if defined(__x86_64__)

#include <immintrin.h>

#include <cassert>
#include <cmath>

#include "qcube/kernels.hpp"

namespace qcube::kernels::avx2 {

double dot(std::span<const double> x, std::span<const double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i + 4), _mm256_loadu_pd(y.data() + i + 4),
                           acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x.data() + i), _mm256_loadu_pd(y.data() + i), acc0);
  }
  acc0 = _mm256_add_pd(acc0, acc1);
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc0);
  double sum = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < n; ++i) sum += x[i] * y[i];
  return sum;
}

void axpy(double a, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  const std::size_t n = x.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d vy = _mm256_loadu_pd(y.data() + i);
    vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x.data() + i), vy);
    _mm256_storeu_pd(y.data() + i, vy);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

void scale(double a, std::span<double> x) {
  const std::size_t n = x.size();
  const __m256d va = _mm256_set1_pd(a);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(x.data() + i, _mm256_mul_pd(va, _mm256_loadu_pd(x.data() + i)));
  }
  for (; i < n; ++i) x[i] *= a;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

}  // namespace qcube::kernels::avx2

#endif  // __x86_64__

#include "qcube/kernels.hpp"

namespace qcube::kernels {

namespace {

struct Backend {
  double (*dot)(std::span<const double>, std::span<const double>);
  void (*axpy)(double, std::span<const double>, std::span<double>);
  void (*scale)(double, std::span<double>);
  double (*norm2)(std::span<const double>);
  const char* name;
};

Backend select_backend() {
#if defined(__x86_64__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return {avx2::dot, avx2::axpy, avx2::scale, avx2::norm2, "avx2"};
  }
#endif
  return {scalar::dot, scalar::axpy, scalar::scale, scalar::norm2, "scalar"};
}

const Backend& backend() {
  static const Backend b = select_backend();
  return b;
}

}  // namespace

double dot(std::span<const double> x, std::span<const double> y) { return backend().dot(x, y); }
void axpy(double a, std::span<const double> x, std::span<double> y) { backend().axpy(a, x, y); }
void scale(double a, std::span<double> x) { backend().scale(a, x); }
double norm2(std::span<const double> x) { return backend().norm2(x); }
const char* active_backend() { return backend().name; }

}  // namespace qcube::kernels

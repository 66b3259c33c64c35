#ifndef QCUBE_KERNELS_HPP
#define QCUBE_KERNELS_HPP

#include <cstddef>
#include <span>

// Dense vector kernels behind the operator and projection code. Scalar
// reference implementations always exist; an AVX2 variant is picked at
// runtime when the CPU supports it. Both variants are exported so the test
// suite can check them against each other.

namespace qcube::kernels {

namespace scalar {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void scale(double a, std::span<double> x);
double norm2(std::span<const double> x);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void scale(double a, std::span<double> x);
double norm2(std::span<const double> x);
}  // namespace avx2
#endif

// Dispatched entry points.
double dot(std::span<const double> x, std::span<const double> y);
void axpy(double a, std::span<const double> x, std::span<double> y);
void scale(double a, std::span<double> x);
double norm2(std::span<const double> x);

// "avx2" or "scalar".
const char* active_backend();

}  // namespace qcube::kernels

#endif

#ifndef QCUBE_QNUM_HPP
#define QCUBE_QNUM_HPP

#include <stdexcept>

namespace qcube {

/// Deformation parameter q > 0. q = 1 selects the classical limit and every
/// q-function below handles it without evaluating the 0/0 quotient.
class DeformationParameter {
 public:
  explicit DeformationParameter(double q) : q_(q) {
    if (!(q > 0.0)) throw std::invalid_argument("deformation parameter must satisfy q > 0");
  }

  double value() const { return q_; }
  bool is_classical() const { return q_ == 1.0; }

 private:
  double q_;
};

// Symmetric q-number [x]_q = (q^x - q^{-x})/(q - q^{-1}), evaluated as the
// Laurent sum q^{x-1} + q^{x-3} + ... + q^{1-x} so q near 1 stays stable.
double q_number(int x, DeformationParameter q);

// [n]_q! = [1]_q [2]_q ... [n]_q, empty product for n = 0.
double q_factorial(int n, DeformationParameter q);

// Symmetric q-binomial [N]_q! / ([n]_q! [N-n]_q!).
double q_binomial(int big_n, int n, DeformationParameter q);

// (a;q)_n = (1-a)(1-aq)...(1-aq^{n-1}). The base is whatever the caller
// threads (the wavefunctions use base q^2).
double q_pochhammer(double a, double q, int n);

}  // namespace qcube

#endif

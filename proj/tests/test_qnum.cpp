#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcube/qnum.hpp"

using qcube::DeformationParameter;

namespace {
const double kGrid[] = {0.5, 0.7, 0.99, 1.0, 1.01, 1.3, 2.0};

// Independent oracle: plain ratio of climbing q-factorials.
double binomial_oracle(int big_n, int n, DeformationParameter q) {
  return qcube::q_factorial(big_n, q) /
         (qcube::q_factorial(n, q) * qcube::q_factorial(big_n - n, q));
}
}  // namespace

TEST_CASE("q_number closed-form values") {
  CHECK(qcube::q_number(2, DeformationParameter(2.0)) == doctest::Approx(2.5).epsilon(1e-14));
  CHECK(qcube::q_number(5, DeformationParameter(1.0)) == 5.0);
  CHECK(qcube::q_number(-3, DeformationParameter(2.0)) == doctest::Approx(-5.25).epsilon(1e-14));
  CHECK(qcube::q_number(0, DeformationParameter(0.7)) == 0.0);
}

TEST_CASE("q_number is odd over the whole grid") {
  for (double q : kGrid) {
    DeformationParameter dq(q);
    for (int x = -20; x <= 20; ++x) {
      const double sum = qcube::q_number(x, dq) + qcube::q_number(-x, dq);
      CHECK(std::abs(sum) <= 1e-14 * std::max(1.0, std::abs(qcube::q_number(x, dq))));
    }
  }
}

TEST_CASE("q_number continuity at q = 1") {
  for (double q : {1.0 - 1e-8, 1.0 + 1e-8}) {
    DeformationParameter dq(q);
    for (int x = -20; x <= 20; ++x) {
      CHECK(std::abs(qcube::q_number(x, dq) - x) <= 1e-6);
    }
  }
}

TEST_CASE("q_factorial") {
  CHECK(qcube::q_factorial(0, DeformationParameter(0.7)) == 1.0);
  CHECK(qcube::q_factorial(3, DeformationParameter(2.0)) ==
        doctest::Approx(13.125).epsilon(1e-14));
  CHECK(qcube::q_factorial(4, DeformationParameter(1.0)) == doctest::Approx(24.0));
  CHECK_THROWS_AS(qcube::q_factorial(-1, DeformationParameter(1.0)), std::invalid_argument);
}

TEST_CASE("q_binomial values and symmetry") {
  const DeformationParameter two(2.0);
  // Laurent polynomial q^-4 + q^-2 + 2 + q^2 + q^4 at q = 2.
  CHECK(qcube::q_binomial(4, 2, two) == doctest::Approx(22.3125).epsilon(1e-14));
  CHECK(qcube::q_binomial(5, 0, DeformationParameter(0.7)) == 1.0);
  CHECK(qcube::q_binomial(4, 2, DeformationParameter(1.0)) == doctest::Approx(6.0));
  CHECK_THROWS_AS(qcube::q_binomial(4, 5, two), std::invalid_argument);
  CHECK_THROWS_AS(qcube::q_binomial(4, -1, two), std::invalid_argument);

  for (double q : kGrid) {
    DeformationParameter dq(q);
    for (int big_n = 0; big_n <= 12; ++big_n)
      for (int n = 0; n <= big_n; ++n)
        CHECK(qcube::q_binomial(big_n, n, dq) == qcube::q_binomial(big_n, big_n - n, dq));
  }
}

TEST_CASE("q_binomial Pascal-type identity against the factorial oracle") {
  for (double q : kGrid) {
    DeformationParameter dq(q);
    for (int big_n = 1; big_n <= 12; ++big_n) {
      for (int n = 0; n <= big_n; ++n) {
        double rhs = 0.0;
        if (n <= big_n - 1) rhs += std::pow(q, n) * binomial_oracle(big_n - 1, n, dq);
        if (n >= 1) rhs += std::pow(q, n - big_n) * binomial_oracle(big_n - 1, n - 1, dq);
        const double lhs = qcube::q_binomial(big_n, n, dq);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::abs(lhs));
      }
    }
  }
}

TEST_CASE("q_pochhammer") {
  CHECK(qcube::q_pochhammer(2.0, 0.5, 3) == doctest::Approx(0.0));
  CHECK(qcube::q_pochhammer(0.3, 0.9, 0) == 1.0);
  CHECK(qcube::q_pochhammer(0.0, 0.4, 5) == 1.0);
  CHECK_THROWS_AS(qcube::q_pochhammer(0.3, 0.9, -1), std::invalid_argument);
}

TEST_CASE("deformation parameter rejects q <= 0") {
  CHECK_THROWS_AS(DeformationParameter(0.0), std::invalid_argument);
  CHECK_THROWS_AS(DeformationParameter(-1.0), std::invalid_argument);
  CHECK(DeformationParameter(1.0).is_classical());
  CHECK_FALSE(DeformationParameter(1.3).is_classical());
}

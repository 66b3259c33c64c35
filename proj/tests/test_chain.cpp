#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "qcube/chain.hpp"

using qcube::DeformationParameter;

TEST_CASE("coupling closed forms") {
  for (double q : {0.5, 0.7, 1.0, 1.3, 2.0}) {
    // J_0 at N = 2 simplifies to sqrt(1 + q^{-2}).
    CHECK(qcube::coupling(2, 0, DeformationParameter(q)) ==
          doctest::Approx(std::sqrt(1.0 + 1.0 / (q * q))).epsilon(1e-13));
  }
  CHECK(qcube::coupling(4, 1, DeformationParameter(1.0)) ==
        doctest::Approx(std::sqrt(6.0)).epsilon(1e-14));
  CHECK_THROWS_AS(qcube::coupling(4, 4, DeformationParameter(1.0)), std::invalid_argument);
  CHECK_THROWS_AS(qcube::coupling(4, -1, DeformationParameter(1.0)), std::invalid_argument);
}

TEST_CASE("N = 2 sum rule J0^2 + J1^2 = [2]_q^2") {
  for (double q : {0.5, 0.7, 1.0, 1.3, 2.0}) {
    const DeformationParameter dq(q);
    const qcube::TridiagonalOperator h = qcube::build_Hq(2, dq);
    const double sum = h.couplings[0] * h.couplings[0] + h.couplings[1] * h.couplings[1];
    const double two_q = qcube::q_number(2, dq);
    CHECK(sum == doctest::Approx(two_q * two_q).epsilon(1e-13));
    // Spectrum is {-[2]_q, 0, [2]_q}.
    const qcube::TridiagonalEigensystem eig = qcube::eigensystem(h);
    CHECK(eig.values[0] == doctest::Approx(-two_q).epsilon(1e-12));
    CHECK(std::abs(eig.values[1]) <= 1e-12 * two_q);
    CHECK(eig.values[2] == doctest::Approx(two_q).epsilon(1e-12));
  }
}

TEST_CASE("build_Hq examples") {
  const qcube::TridiagonalOperator h1 = qcube::build_Hq(1, DeformationParameter(1.7));
  CHECK(h1.size == 2);
  CHECK(h1.couplings[0] == doctest::Approx(1.0).epsilon(1e-14));

  const qcube::TridiagonalOperator h3 = qcube::build_Hq(3, DeformationParameter(1.0));
  CHECK(h3.couplings[0] == doctest::Approx(std::sqrt(3.0)));
  CHECK(h3.couplings[1] == doctest::Approx(2.0));
  CHECK(h3.couplings[2] == doctest::Approx(std::sqrt(3.0)));

  const qcube::TridiagonalOperator h2 = qcube::build_Hq(2, DeformationParameter(2.0));
  CHECK(h2.couplings[0] == doctest::Approx(std::sqrt(1.25)));
  CHECK(h2.couplings[1] == doctest::Approx(std::sqrt(5.0)));
}

TEST_CASE("mirror symmetry of couplings holds only at q = 1") {
  for (int n = 1; n <= 9; ++n) {
    const qcube::TridiagonalOperator h = qcube::build_Hq(n, DeformationParameter(1.0));
    for (int i = 0; i < n; ++i)
      CHECK(h.couplings[i] == doctest::Approx(h.couplings[n - 1 - i]).epsilon(1e-14));
  }
  const qcube::TridiagonalOperator h = qcube::build_Hq(4, DeformationParameter(1.3));
  CHECK(std::abs(h.couplings[0] - h.couplings[3]) > 0.1);
}

TEST_CASE("projection of A_q onto the q-Dicke basis is H_q") {
  for (double q : {0.5, 0.7, 1.0, 1.3, 2.0}) {
    for (int n = 1; n <= 6; ++n) {
      const qcube::ProjectionCheck check = qcube::check_projection(n, DeformationParameter(q));
      CHECK(check.max_tridiagonal_error <= 1e-10);
      CHECK(check.max_leakage <= 1e-12);
      CHECK(check.max_subspace_residual <= 1e-12);
    }
  }
}

TEST_CASE("projection entry (1,0) at N = 2") {
  for (double q : {0.7, 1.3}) {
    const DeformationParameter dq(q);
    const auto proj = qcube::project_Aq(qcube::build_Aq(2, dq), qcube::dicke_basis(2, dq));
    CHECK(proj[1][0] == doctest::Approx(std::sqrt(1.0 + 1.0 / (q * q))).epsilon(1e-12));
  }
}

TEST_CASE("single-excitation restriction reproduces H_q") {
  const qcube::TridiagonalOperator h2 =
      qcube::single_excitation_restriction(2, DeformationParameter(1.0));
  CHECK(h2.couplings[0] == doctest::Approx(std::sqrt(2.0)));
  CHECK(h2.couplings[1] == doctest::Approx(std::sqrt(2.0)));

  const qcube::TridiagonalOperator h1 =
      qcube::single_excitation_restriction(1, DeformationParameter(0.6));
  CHECK(h1.couplings[0] == doctest::Approx(1.0));

  for (double q : {0.7, 1.3}) {
    const DeformationParameter dq(q);
    const qcube::TridiagonalOperator restricted = qcube::single_excitation_restriction(4, dq);
    const qcube::TridiagonalOperator built = qcube::build_Hq(4, dq);
    for (int n = 0; n < 4; ++n)
      CHECK(restricted.couplings[n] == doctest::Approx(built.couplings[n]).epsilon(1e-14));
  }
}

TEST_CASE("H_q spectrum is the multiset {[2k-N]_q}") {
  for (double q : {0.5, 0.7, 1.0, 1.3, 2.0}) {
    const DeformationParameter dq(q);
    for (int n = 1; n <= 12; ++n) {
      const qcube::TridiagonalEigensystem eig = qcube::eigensystem(qcube::build_Hq(n, dq));
      std::vector<double> expected;
      for (int k = 0; k <= n; ++k) expected.push_back(qcube::q_number(2 * k - n, dq));
      std::sort(expected.begin(), expected.end());
      const double span = expected.back() - expected.front();
      for (int k = 0; k <= n; ++k)
        CHECK(std::abs(eig.values[k] - expected[k]) <= 1e-9 * std::max(1.0, span));
    }
  }
}

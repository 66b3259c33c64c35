#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "qcube/chain.hpp"
#include "qcube/polys.hpp"

using qcube::DeformationParameter;
using qcube::DualQKrawtchoukParams;

TEST_CASE("terminating 3phi2: degenerate arguments give 1") {
  const DualQKrawtchoukParams params{-1.0, 4, 0.49};
  for (int x = 0; x <= 4; ++x) CHECK(qcube::phi32_terminating(0, x, params) == 1.0);
  for (int n = 0; n <= 4; ++n) CHECK(qcube::phi32_terminating(n, 0, params) == 1.0);
}

TEST_CASE("terminating 3phi2: two-term sum at n = x = 1") {
  const double bq = 0.49;
  const DualQKrawtchoukParams params{-1.0, 4, bq};
  // Direct j = 0, 1 summation with the same parameter set.
  const double j1 = (1.0 - std::pow(bq, -1)) * (1.0 - std::pow(bq, -1)) *
                    (1.0 + std::pow(bq, 1 - 4)) /
                    ((1.0 - bq) * (1.0 - std::pow(bq, -4))) * bq;
  CHECK(qcube::phi32_terminating(1, 1, params) == doctest::Approx(1.0 + j1).epsilon(1e-14));
}

TEST_CASE("3phi2 argument validation") {
  const DualQKrawtchoukParams params{-1.0, 4, 0.49};
  CHECK_THROWS_AS(qcube::phi32_terminating(5, 1, params), std::invalid_argument);
  CHECK_THROWS_AS(qcube::phi32_terminating(1, -1, params), std::invalid_argument);
  CHECK_THROWS_AS(qcube::phi32_terminating(1, 1, DualQKrawtchoukParams{1.0, 4, 0.49}),
                  std::invalid_argument);
}

TEST_CASE("wavefunction matrix at N = 1 is the Hadamard rotation") {
  for (double q : {0.7, 1.0, 1.6}) {
    const auto u = qcube::wavefunction_matrix(1, DeformationParameter(q));
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(u[0][0] == doctest::Approx(r).epsilon(1e-12));
    CHECK(u[1][0] == doctest::Approx(r).epsilon(1e-12));
    CHECK(u[0][1] == doctest::Approx(r).epsilon(1e-12));
    CHECK(u[1][1] == doctest::Approx(-r).epsilon(1e-12));
  }
}

TEST_CASE("orthogonality and eigen-residuals over the grid") {
  for (double q : {0.5, 0.7, 1.0, 1.3, 2.0}) {
    for (int n = 1; n <= 10; ++n) {
      const qcube::SpectralReport report = qcube::spectral_verify(n, DeformationParameter(q));
      CHECK(report.max_orthogonality_error <= 1e-9);
      CHECK(report.max_eigen_residual <= 1e-9);
      CHECK(report.max_recurrence_residual <= 1e-9);
    }
  }
}

TEST_CASE("classical Krawtchouk wavefunctions") {
  SUBCASE("K_0 row") {
    for (int k = 0; k <= 5; ++k) {
      double binom = 1.0;
      for (int i = 1; i <= k; ++i) binom *= static_cast<double>(5 - i + 1) / i;
      CHECK(qcube::krawtchouk_wavefunction(0, k, 5) ==
            doctest::Approx(std::pow(2.0, -2.5) * std::sqrt(binom)).epsilon(1e-13));
    }
  }

  SUBCASE("N = 1 matrix") {
    const double r = 1.0 / std::sqrt(2.0);
    CHECK(qcube::krawtchouk_wavefunction(0, 0, 1) == doctest::Approx(r));
    CHECK(qcube::krawtchouk_wavefunction(1, 0, 1) == doctest::Approx(r));
    CHECK(qcube::krawtchouk_wavefunction(1, 1, 1) == doctest::Approx(-r));
  }

  SUBCASE("self-duality: matrix is symmetric") {
    for (int n_sites = 1; n_sites <= 10; ++n_sites)
      for (int n = 0; n <= n_sites; ++n)
        for (int k = 0; k <= n_sites; ++k)
          CHECK(std::abs(qcube::krawtchouk_wavefunction(n, k, n_sites) -
                         qcube::krawtchouk_wavefunction(k, n, n_sites)) <= 1e-12);
  }

  SUBCASE("out of range rejected") {
    CHECK_THROWS_AS(qcube::krawtchouk_wavefunction(3, 0, 2), std::invalid_argument);
  }
}

TEST_CASE("q -> 1 limit agrees with the Krawtchouk matrix per column") {
  for (int n_sites = 1; n_sites <= 8; ++n_sites) {
    const auto u = qcube::wavefunction_matrix(n_sites, DeformationParameter(1.0 + 1e-6));
    for (int k = 0; k <= n_sites; ++k) {
      // Fix the classical column sign the same way the builder does.
      double sign = 0.0;
      for (int n = 0; n <= n_sites && sign == 0.0; ++n) {
        const double v = qcube::krawtchouk_wavefunction(n, k, n_sites);
        if (v != 0.0) sign = v > 0.0 ? 1.0 : -1.0;
      }
      for (int n = 0; n <= n_sites; ++n)
        CHECK(std::abs(u[n][k] - sign * qcube::krawtchouk_wavefunction(n, k, n_sites)) <= 1e-4);
    }
  }
}

TEST_CASE("spectral_verify examples") {
  // N = 6, q = 1: integer ladder -6 ... 6 through the dense eigensolver.
  const qcube::TridiagonalEigensystem eig =
      qcube::eigensystem(qcube::build_Hq(6, DeformationParameter(1.0)));
  for (int k = 0; k <= 6; ++k) CHECK(eig.values[k] == doctest::Approx(2.0 * k - 6.0).epsilon(1e-12));

  // N = 8, q = 1.3: dense eigensolver vs the q-number multiset.
  const DeformationParameter dq(1.3);
  const qcube::TridiagonalEigensystem eig8 = qcube::eigensystem(qcube::build_Hq(8, dq));
  for (int k = 0; k <= 8; ++k)
    CHECK(eig8.values[k] == doctest::Approx(qcube::q_number(2 * k - 8, dq)).epsilon(1e-9));
}

TEST_CASE("normalized evaluator rejects a positive c") {
  CHECK_THROWS_AS(qcube::normalized_dual_q_krawtchouk(1, 1, DualQKrawtchoukParams{0.5, 4, 0.49}),
                  std::invalid_argument);
}

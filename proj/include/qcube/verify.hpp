#ifndef QCUBE_VERIFY_HPP
#define QCUBE_VERIFY_HPP

#include <string>
#include <vector>

namespace qcube {

struct CheckResult {
  std::string name;
  double max_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct VerificationReport {
  int n = 0;
  double q = 1.0;
  std::vector<CheckResult> checks;
  bool overall = false;

  std::string to_json() const;
};

// Runs every identity check at size N and deformation q. Per-check
// tolerances keep their documented ratios and scale linearly with tol
// (tol = 1e-9 reproduces the documented values). The PST check only applies
// at q = 1.
VerificationReport run_suite(int num_sites, double q, double tol = 1e-9);

inline constexpr int kSuiteMaxSites = 14;

}  // namespace qcube

#endif

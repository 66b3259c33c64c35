#include "qcube/dicke.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "qcube/operators.hpp"

namespace qcube {

std::vector<double> qdicke_direct(int num_sites, int n, DeformationParameter q) {
  if (num_sites < 1 || num_sites > kMaxSites)
    throw std::invalid_argument("qdicke_direct: N out of range");
  if (n < 0 || n > num_sites) throw std::invalid_argument("qdicke_direct: need 0 <= n <= N");
  const std::size_t dim = std::size_t{1} << num_sites;
  std::vector<double> state(dim, 0.0);
  const double norm = 1.0 / std::sqrt(q_binomial(num_sites, n, q));
  const double half_shift = 0.5 * n * (num_sites - n);
  for (const BitString& x : enumerate_weight(num_sites, n)) {
    state[x.index] = norm * std::pow(q.value(), half_shift - inversion_number(x));
  }
  return state;
}

std::vector<double> qdicke_lowering(int num_sites, int n, DeformationParameter q) {
  if (num_sites < 1 || num_sites > kMaxSites)
    throw std::invalid_argument("qdicke_lowering: N out of range");
  if (n < 0 || n > num_sites) throw std::invalid_argument("qdicke_lowering: need 0 <= n <= N");
  const std::size_t dim = std::size_t{1} << num_sites;
  const SparseOperator xminus = coproduct_power(Generator::SigmaMinus, num_sites, q);

  // (X^-)^n |0...0> by repeated sparse application, never by matrix powers.
  std::vector<double> state(dim, 0.0), next(dim, 0.0);
  state[0] = 1.0;
  for (int step = 0; step < n; ++step) {
    xminus.apply(state, next);
    state.swap(next);
  }
  const double norm = 1.0 / (q_factorial(n, q) * std::sqrt(q_binomial(num_sites, n, q)));
  for (double& c : state) c *= norm;

  const std::vector<double> direct = qdicke_direct(num_sites, n, q);
  for (std::size_t i = 0; i < dim; ++i) {
    if (std::abs(state[i] - direct[i]) > 1e-12)
      throw std::logic_error("qdicke_lowering: disagreement with the inversion-number form");
  }
  return state;
}

DickeBasis dicke_basis(int num_sites, DeformationParameter q) {
  DickeBasis basis;
  basis.num_sites = num_sites;
  basis.q = q.value();
  basis.columns.reserve(static_cast<std::size_t>(num_sites) + 1);
  for (int n = 0; n <= num_sites; ++n) basis.columns.push_back(qdicke_direct(num_sites, n, q));
  return basis;
}

void print_state(const std::vector<double>& state, int num_sites, std::ostream& os) {
  char buf[32];
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (state[i] == 0.0) continue;
    std::snprintf(buf, sizeof buf, "%.12g", state[i]);
    os << BitString(num_sites, static_cast<std::uint32_t>(i)).to_string() << " " << buf << "\n";
  }
}

}  // namespace qcube

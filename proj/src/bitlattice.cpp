#include "qcube/bitlattice.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qcube {

BitString::BitString(int n, std::uint32_t idx) : length(n), index(idx) {
  if (n < 1 || n > kMaxSites) throw std::invalid_argument("BitString: length out of range");
  if (n < 32 && (idx >> n) != 0) throw std::invalid_argument("BitString: index exceeds 2^N");
}

int BitString::weight() const { return std::popcount(index); }

std::string BitString::to_string() const {
  std::string s(static_cast<std::size_t>(length), '0');
  for (int i = 1; i <= length; ++i)
    if (bit(i)) s[static_cast<std::size_t>(i - 1)] = '1';
  return s;
}

BitString bitstring_from_string(const std::string& bits) {
  std::uint32_t idx = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw std::invalid_argument("bitstring_from_string: expected 0/1");
    idx = (idx << 1) | static_cast<std::uint32_t>(c - '0');
  }
  return BitString(static_cast<int>(bits.size()), idx);
}

int hamming_distance(const BitString& x, const BitString& y) {
  if (x.length != y.length) throw std::invalid_argument("hamming_distance: length mismatch");
  return std::popcount(x.index ^ y.index);
}

int inversion_number(const BitString& x) {
  // Scan left to right: each 0 is inverted against every 1 seen before it.
  int ones_seen = 0;
  int inversions = 0;
  for (int site = 1; site <= x.length; ++site) {
    if (x.bit(site))
      ++ones_seen;
    else
      inversions += ones_seen;
  }
  return inversions;
}

std::vector<BitString> enumerate_weight(int num_sites, int n) {
  if (num_sites < 1 || num_sites > kMaxSites)
    throw std::invalid_argument("enumerate_weight: N out of range");
  if (n < 0 || n > num_sites) throw std::invalid_argument("enumerate_weight: need 0 <= n <= N");
  std::vector<BitString> out;
  if (n == 0) {
    out.emplace_back(num_sites, 0u);
    return out;
  }
  // Gosper's hack walks weight-n masks in increasing order.
  std::uint32_t v = (1u << n) - 1u;
  const std::uint32_t limit = (num_sites == 32) ? ~0u : (1u << num_sites);
  while (v < limit) {
    out.emplace_back(num_sites, v);
    std::uint32_t t = v | (v - 1u);
    v = (t + 1u) | (((~t & (t + 1u)) - 1u) >> (std::countr_zero(v) + 1));
  }
  return out;
}

double inversion_sum(int num_sites, int n, DeformationParameter q) {
  if (n < 0 || n > num_sites) throw std::invalid_argument("inversion_sum: need 0 <= n <= N");
  double sum = 0.0;
  for (const BitString& x : enumerate_weight(num_sites, n)) {
    sum += std::pow(q.value(), n * (num_sites - n) - 2 * inversion_number(x));
  }
  return sum;
}

int inversion_step(const BitString& x, const BitString& y) {
  if (x.length != y.length) throw std::invalid_argument("inversion_step: length mismatch");
  const std::uint32_t diff = x.index ^ y.index;
  if (std::popcount(diff) != 1 || (x.index & diff) != 0)
    throw std::invalid_argument("inversion_step: y must be x with one 0 -> 1 flip");
  const int site = x.length - std::countr_zero(diff);
  const int step = inversion_number(x) - inversion_number(y);
  if (step != x.weight() + site - x.length)
    throw std::logic_error("inversion_step: identity inv(x) - inv(y) = n + i - N violated");
  return step;
}

}  // namespace qcube

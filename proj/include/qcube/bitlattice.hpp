#ifndef QCUBE_BITLATTICE_HPP
#define QCUBE_BITLATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "qcube/qnum.hpp"

namespace qcube {

// Sparse operators hold N * 2^N entries; 24 sites is the hard ceiling.
inline constexpr int kMaxSites = 24;

/// Vertex of the N-cube. Site 1 is the leftmost tensor factor and maps to the
/// most significant bit: index = sum_i x_i * 2^{N-i}.
struct BitString {
  int length = 0;
  std::uint32_t index = 0;

  BitString() = default;
  BitString(int n, std::uint32_t idx);

  // 1-based site access, site 1 = MSB.
  int bit(int site) const { return static_cast<int>((index >> (length - site)) & 1u); }
  int weight() const;

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;
};

// Parses e.g. "0110"; used by tests and the CLI.
BitString bitstring_from_string(const std::string& bits);

int hamming_distance(const BitString& x, const BitString& y);

// Number of pairs i < j with x_i = 1, x_j = 0; the adjacent-swap distance to
// the sorted string 0...01...1.
int inversion_number(const BitString& x);

// All C(N,n) strings of weight n in increasing index order.
std::vector<BitString> enumerate_weight(int num_sites, int n);

// Sum over weight-n strings of q^{n(N-n) - 2 inv(x)}; equals the symmetric
// q-binomial.
double inversion_sum(int num_sites, int n, DeformationParameter q);

// For y = x with a single 0 -> 1 flip at site i, returns inv(x) - inv(y) and
// checks it equals weight(x) + i - N.
int inversion_step(const BitString& x, const BitString& y);

}  // namespace qcube

#endif

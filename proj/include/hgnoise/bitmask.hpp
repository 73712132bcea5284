#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hgnoise {

// Elements of Z_2^n are packed into machine words, n <= 32.
// Bit i holds qubit i+1, i.e. the lowest bit is qubit 1.
using mask_t = std::uint32_t;

constexpr int kMaxQubits = 32;

inline int weight(mask_t m) { return std::popcount(m); }

// Binary inner product a.b over GF(2).
inline int dot(mask_t a, mask_t b) { return std::popcount(a & b) & 1; }

inline mask_t full_mask(int n) {
  return n >= 32 ? ~mask_t{0} : ((mask_t{1} << n) - 1);
}

inline mask_t qubit_bit(int qubit_1based) {
  return mask_t{1} << (qubit_1based - 1);
}

// Canonical form of a GF(2) set of masks: sorted, with pairs cancelled.
// Shared by hypergraph edge sets and Boolean-polynomial monomial sets.
std::vector<mask_t> xor_canonicalize(std::vector<mask_t> items);

}  // namespace hgnoise

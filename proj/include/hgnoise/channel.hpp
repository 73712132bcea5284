#pragma once

#include <string>
#include <vector>

#include "hgnoise/bitmask.hpp"
#include "hgnoise/hypergraph.hpp"

namespace hgnoise {

// One Pauli error X^{bx} Z^{bz} with its rate. Y on a qubit sets that bit in
// both masks; channels never need the phase.
struct PauliTerm {
  mask_t bx = 0;
  mask_t bz = 0;
  double rate = 0.0;

  int error_weight() const { return weight(bx | bz); }
};

struct PauliChannel {
  int n = 0;
  std::vector<PauliTerm> terms;  // sorted by (bx, bz), duplicate-free

  // Sorts, merges duplicates, checks rates.
  static PauliChannel from_terms(int n, std::vector<PauliTerm> terms);
  static PauliChannel identity(int n);

  double total_rate() const;
  double identity_rate() const;
  bool is_normalized(double tol = 1e-12) const;
  void validate(double tol = 1e-12) const;
};

enum class NoiseKind { depolarizing, xz, z, x };

NoiseKind noise_kind_from_string(const std::string& s);
std::string to_string(NoiseKind k);

// Independent per-qubit noise on every vertex covered by an edge of `graph`,
// expanded into explicit terms up to (excluding) `weight_cutoff`. The pruned
// probability is returned through dropped_mass and never silently
// renormalized.
//
// Per covered qubit:
//   depolarizing: X, Y, Z each at tau/3
//   z:            Z at tau
//   x:            X at tau
//   xz:           independent X and Z flips, each with probability tau
//                 (so Y = both appears at tau^2)
PauliChannel preset_local(int n, const Hypergraph& graph, NoiseKind kind,
                          double tau, int weight_cutoff = 4,
                          double* dropped_mass = nullptr);

// Composition of two Pauli channels: XOR the masks, multiply the rates.
// Rates are rescaled to sum to 1.
PauliChannel compose(const PauliChannel& c1, const PauliChannel& c2);

struct TruncatedChannel {
  PauliChannel channel;  // terms of weight < K, rates untouched
  double dropped_mass;
};

TruncatedChannel truncate_by_weight(const PauliChannel& c, int k);

// Analytic bound (unit constant) on the probability of an error of weight
// >= K under per-qubit rate tau: n (n^2 tau)^K. Requires n^2 tau < 1.
double tail_bound(int n, double tau, int k);

}  // namespace hgnoise

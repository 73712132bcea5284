#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hgnoise/distribution.hpp"

namespace hgnoise {

// Stateless counter-addressed generator (splitmix64 finalizer over an
// affine counter walk). Draw i depends only on (seed, i), so any partition
// of the index space across workers reproduces the same stream.
struct CounterRng {
  std::uint64_t seed = 0;
  std::uint64_t at(std::uint64_t counter) const;
  // uniform double in [0, 1) with 53 random bits
  double uniform(std::uint64_t counter) const;
};

// Walker/Vose alias table for O(1) draws from a sparse distribution.
class AliasTable {
 public:
  explicit AliasTable(const Distribution& p);
  // slot from r_slot (unbiased 64-bit range reduction), accept coin from
  // r_coin
  mask_t draw(std::uint64_t r_slot, std::uint64_t r_coin) const;
  std::size_t size() const { return outcome_.size(); }

 private:
  std::vector<mask_t> outcome_;
  std::vector<double> accept_;
  std::vector<std::uint32_t> alias_;
};

// Empirical convolution powers drawn from one counter-addressed stream.
// Shot s draws fresh pair-XORs b_1..b_{J+1} (two base draws each) and
// records the prefix XORs, so power j accumulates b_1 + ... + b_{j+1}.
// Fixed (seed, shots, max_power) give bit-identical counts at any thread
// count, and shorter runs are prefixes of longer ones.
struct SampleBatch {
  int n = 0;
  std::uint64_t seed = 0;
  long long shots = 0;
  int max_power = 0;
  // counts[j]: sorted (mask, count) histogram of power j
  std::vector<std::vector<std::pair<mask_t, long long>>> counts;

  Distribution empirical(int power_j) const;
};

// threads <= 0 resolves HGNOISE_THREADS, then hardware concurrency.
SampleBatch sample_powers(const Distribution& p, long long shots,
                          int max_power, std::uint64_t seed, int threads = 0);

int resolve_thread_count(int requested);

}  // namespace hgnoise

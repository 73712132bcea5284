#include "hgnoise/sampler.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <thread>
#include <unordered_map>

namespace hgnoise {

std::uint64_t CounterRng::at(std::uint64_t counter) const {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double CounterRng::uniform(std::uint64_t counter) const {
  return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
}

AliasTable::AliasTable(const Distribution& p) {
  if (!p.is_probability(1e-9))
    throw std::invalid_argument("AliasTable: input is not a probability "
                                "distribution");
  std::size_t k = p.entries.size();
  if (k == 0) throw std::invalid_argument("AliasTable: empty distribution");
  double total = p.sum();

  outcome_.resize(k);
  accept_.assign(k, 1.0);
  alias_.resize(k);
  std::vector<double> scaled(k);
  for (std::size_t i = 0; i < k; ++i) {
    outcome_[i] = p.entries[i].first;
    scaled[i] = std::max(p.entries[i].second, 0.0) / total * k;
    alias_[i] = static_cast<std::uint32_t>(i);
  }

  std::vector<std::uint32_t> small, large;
  for (std::size_t i = 0; i < k; ++i)
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  while (!small.empty() && !large.empty()) {
    std::uint32_t s = small.back();
    std::uint32_t l = large.back();
    small.pop_back();
    accept_[s] = scaled[s];
    alias_[s] = l;
    scaled[l] -= 1.0 - scaled[s];
    if (scaled[l] < 1.0) {
      large.pop_back();
      small.push_back(l);
    }
  }
  // leftovers are 1 within rounding
  for (std::uint32_t i : small) accept_[i] = 1.0;
  for (std::uint32_t i : large) accept_[i] = 1.0;
}

mask_t AliasTable::draw(std::uint64_t r_slot, std::uint64_t r_coin) const {
  std::size_t k = outcome_.size();
  auto idx = static_cast<std::size_t>(
      (static_cast<unsigned __int128>(r_slot) * k) >> 64);
  double coin = static_cast<double>(r_coin >> 11) * 0x1.0p-53;
  return coin < accept_[idx] ? outcome_[idx] : outcome_[alias_[idx]];
}

Distribution SampleBatch::empirical(int power_j) const {
  if (power_j < 0 || power_j > max_power)
    throw std::invalid_argument("SampleBatch: power out of range");
  std::vector<std::pair<mask_t, double>> e;
  e.reserve(counts[power_j].size());
  double inv = 1.0 / static_cast<double>(shots);
  for (auto& [m, c] : counts[power_j])
    e.emplace_back(m, static_cast<double>(c) * inv);
  return Distribution::from_entries(n, Distribution::Kind::prob, std::move(e));
}

int resolve_thread_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("HGNOISE_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

SampleBatch sample_powers(const Distribution& p, long long shots,
                          int max_power, std::uint64_t seed, int threads) {
  if (shots < 1) throw std::invalid_argument("sample_powers: shots must be >= 1");
  if (max_power < 0)
    throw std::invalid_argument("sample_powers: max_power must be >= 0");
  AliasTable table(p);
  CounterRng rng{seed};

  int workers = std::min<long long>(resolve_thread_count(threads), shots);
  // counters per shot: J+1 pair draws, 2 base draws each, 2 words per draw
  std::uint64_t stride = 4ull * (max_power + 1);

  using Hist = std::unordered_map<mask_t, long long>;
  std::vector<std::vector<Hist>> local(
      workers, std::vector<Hist>(max_power + 1));

  auto run_range = [&](int worker, long long begin, long long end) {
    auto& hists = local[worker];
    for (long long st = begin; st < end; ++st) {
      std::uint64_t base = static_cast<std::uint64_t>(st) * stride;
      mask_t prefix = 0;
      for (int j = 0; j <= max_power; ++j) {
        std::uint64_t c = base + 4ull * j;
        mask_t a1 = table.draw(rng.at(c), rng.at(c + 1));
        mask_t a2 = table.draw(rng.at(c + 2), rng.at(c + 3));
        prefix ^= a1 ^ a2;
        ++hists[j][prefix];
      }
    }
  };

  if (workers <= 1) {
    run_range(0, 0, shots);
  } else {
    std::vector<std::thread> pool;
    long long chunk = (shots + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      long long b = w * chunk;
      long long e = std::min<long long>(shots, b + chunk);
      if (b >= e) break;
      pool.emplace_back(run_range, w, b, e);
    }
    for (auto& t : pool) t.join();
  }

  SampleBatch batch{p.n, seed, shots, max_power, {}};
  batch.counts.resize(max_power + 1);
  for (int j = 0; j <= max_power; ++j) {
    Hist merged;
    for (int w = 0; w < workers; ++w)
      for (auto& [m, c] : local[w][j]) merged[m] += c;
    auto& out = batch.counts[j];
    out.assign(merged.begin(), merged.end());
    std::sort(out.begin(), out.end());
  }
  return batch;
}

}  // namespace hgnoise

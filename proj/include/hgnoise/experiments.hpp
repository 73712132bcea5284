#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hgnoise/channel.hpp"

namespace hgnoise {

// Stored configuration for the three built-in studies. Every run is a pure
// function of (config, seed): reruns produce byte-identical files.
struct RunConfig {
  std::string experiment;  // fig3 | fig4 | fig5
  std::uint64_t seed = 0;
  bool has_seed = false;
  std::string out_dir;
  int threads = 0;  // 0: HGNOISE_THREADS, then hardware concurrency

  // fig3: exact-decoder convergence on the 4-qubit complete hypergraph
  std::vector<long long> fig3_shots;
  double fig3_p0 = 0.819;

  // fig4: decoded-vs-measured distance ratio over random dephasing pairs
  std::vector<int> fig4_n;
  double fig4_delta = 0.05;
  int fig4_pairs = 500;

  // fig5: series decoders on the noisy Union Jack state
  int fig5_rows = 2;
  int fig5_cols = 3;
  NoiseKind fig5_kind = NoiseKind::depolarizing;
  double fig5_tau = 0.005;
  int fig5_cutoff = 4;
  std::vector<long long> fig5_shots;
  std::vector<std::pair<int, int>> fig5_ws;
};

RunConfig default_run_config(const std::string& experiment);

// Overlay of "key = value" lines ('#' comments allowed); see README for the
// key list.
void apply_config_file(RunConfig& cfg, const std::string& path);

void validate_config(const RunConfig& cfg);

// Runs the configured experiment and returns the paths written.
std::vector<std::string> run_experiment(const RunConfig& cfg);

}  // namespace hgnoise

#include "hgnoise/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "hgnoise/convolution.hpp"
#include "hgnoise/io.hpp"
#include "hgnoise/sampler.hpp"
#include "hgnoise/series.hpp"
#include "hgnoise/solver.hpp"
#include "hgnoise/tailoring.hpp"

namespace hgnoise {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Point mass 1-delta at 0 plus a Dirichlet-uniform tail on the remaining
// masks, drawn from counters [base, base + 2^n - 1).
Distribution random_dephasing(int n, double delta, const CounterRng& rng,
                              std::uint64_t base) {
  std::size_t dim = std::size_t{1} << n;
  std::vector<double> exp_tail(dim - 1);
  double total = 0.0;
  for (std::size_t i = 0; i < dim - 1; ++i) {
    double u = rng.uniform(base + i);
    if (u <= 0.0) u = 0x1.0p-53;
    exp_tail[i] = -std::log(u);
    total += exp_tail[i];
  }
  std::vector<std::pair<mask_t, double>> e;
  e.reserve(dim);
  e.emplace_back(0, 1.0 - delta);
  for (std::size_t i = 0; i < dim - 1; ++i)
    e.emplace_back(static_cast<mask_t>(i + 1), delta * exp_tail[i] / total);
  return Distribution::from_entries(n, Distribution::Kind::prob, std::move(e));
}

std::string out_path(const RunConfig& cfg, const std::string& name) {
  return (std::filesystem::path(cfg.out_dir) / name).string();
}

std::vector<std::string> run_fig3(const RunConfig& cfg) {
  const int n = 4;
  CounterRng derive{cfg.seed};
  CounterRng gen{derive.at(1)};
  std::uint64_t sampling_seed = derive.at(2);

  Distribution p = random_dephasing(n, 1.0 - cfg.fig3_p0, gen, 0);

  // decoded components reported for the largest true masses after 0
  std::vector<std::pair<mask_t, double>> ranked(p.entries.begin(),
                                                p.entries.end());
  std::sort(ranked.begin(), ranked.end(), [](auto& a, auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<mask_t> tracked;
  for (auto& [m, v] : ranked) {
    if (m == 0) continue;
    tracked.push_back(m);
    if (tracked.size() == 3) break;
  }

  std::ostringstream csv;
  csv << "shots,l1_error,p0";
  for (mask_t m : tracked) csv << ",p_" << mask_to_hex(m);
  csv << "\n";
  for (long long shots : cfg.fig3_shots) {
    SampleBatch batch = sample_powers(p, shots, 0, sampling_seed, cfg.threads);
    ExactSolution sol = solve_exact(batch.empirical(0));
    csv << shots << "," << fmt(l1_distance(p, sol.p)) << ","
        << fmt(sol.p.value(0));
    for (mask_t m : tracked) csv << "," << fmt(sol.p.value(m));
    csv << "\n";
  }

  nlohmann::json meta = {{"experiment", "fig3"},
                         {"graph", "k4"},
                         {"n", n},
                         {"seed", cfg.seed},
                         {"p0_true", p.value(0)},
                         {"shots", cfg.fig3_shots}};
  std::string csv_path = out_path(cfg, "fig3_convergence.csv");
  std::string meta_path = out_path(cfg, "fig3_meta.json");
  write_text_file(csv_path, csv.str());
  write_text_file(meta_path, meta.dump(2) + "\n");
  return {csv_path, meta_path};
}

std::vector<std::string> run_fig4(const RunConfig& cfg) {
  CounterRng derive{cfg.seed};
  std::ostringstream csv;
  csv << "n,pairs,delta,mean_ratio,stderr\n";

  for (int n : cfg.fig4_n) {
    std::vector<double> ratios(cfg.fig4_pairs, 0.0);
    auto run_range = [&](int begin, int end) {
      for (int i = begin; i < end; ++i) {
        std::uint64_t pair_seed =
            derive.at((static_cast<std::uint64_t>(n) << 32) | i);
        CounterRng gen{pair_seed};
        std::size_t dim = std::size_t{1} << n;
        Distribution p1 = random_dephasing(n, cfg.fig4_delta, gen, 0);
        Distribution p2 = random_dephasing(n, cfg.fig4_delta, gen, dim + 8);
        Distribution mu1 = convolve(p1, p1);
        Distribution mu2 = convolve(p2, p2);
        Distribution d1 = solve_exact(mu1).p;
        Distribution d2 = solve_exact(mu2).p;
        ratios[i] = l1_distance(d1, d2) / l1_distance(mu1, mu2);
      }
    };
    int workers = std::min(resolve_thread_count(cfg.threads), cfg.fig4_pairs);
    if (workers <= 1) {
      run_range(0, cfg.fig4_pairs);
    } else {
      std::vector<std::thread> pool;
      int chunk = (cfg.fig4_pairs + workers - 1) / workers;
      for (int w = 0; w < workers; ++w) {
        int b = w * chunk;
        int e = std::min(cfg.fig4_pairs, b + chunk);
        if (b >= e) break;
        pool.emplace_back(run_range, b, e);
      }
      for (auto& t : pool) t.join();
    }

    double mean = 0.0;
    for (double r : ratios) mean += r;
    mean /= cfg.fig4_pairs;
    double var = 0.0;
    for (double r : ratios) var += (r - mean) * (r - mean);
    double stderr_v = cfg.fig4_pairs > 1
                          ? std::sqrt(var / (cfg.fig4_pairs - 1.0) /
                                      cfg.fig4_pairs)
                          : 0.0;
    csv << n << "," << cfg.fig4_pairs << "," << fmt(cfg.fig4_delta) << ","
        << fmt(mean) << "," << fmt(stderr_v) << "\n";
  }

  nlohmann::json meta = {{"experiment", "fig4"},
                         {"seed", cfg.seed},
                         {"delta", cfg.fig4_delta},
                         {"pairs", cfg.fig4_pairs},
                         {"n_list", cfg.fig4_n}};
  std::string csv_path = out_path(cfg, "fig4_ratio.csv");
  std::string meta_path = out_path(cfg, "fig4_meta.json");
  write_text_file(csv_path, csv.str());
  write_text_file(meta_path, meta.dump(2) + "\n");
  return {csv_path, meta_path};
}

std::vector<std::string> run_fig5(const RunConfig& cfg) {
  Hypergraph graph = build_union_jack(cfg.fig5_rows, cfg.fig5_cols);
  double dropped = 0.0;
  PauliChannel channel = preset_local(graph.n, graph, cfg.fig5_kind,
                                      cfg.fig5_tau, cfg.fig5_cutoff, &dropped);
  Distribution p = tailored_distribution(graph, channel, TailorMethod::local);
  double delta = p.infidelity();

  std::vector<CoeffTable> tables;
  int max_power = 0;
  for (auto& [w, s] : cfg.fig5_ws) {
    tables.push_back(series_coefficients(w, s));
    max_power = std::max(max_power, tables.back().term_count() - 1);
  }

  // the channel cutoff leaves p slightly sub-normalized; sampling draws from
  // the renormalized distribution and the deficit is reported in metadata
  double kept = p.sum();
  std::vector<std::pair<mask_t, double>> scaled = p.entries;
  for (auto& [m, v] : scaled) v /= kept;
  Distribution p_sampling = Distribution::from_entries(
      p.n, Distribution::Kind::prob, std::move(scaled));

  CounterRng derive{cfg.seed};
  std::uint64_t sampling_seed = derive.at(1);

  std::ostringstream csv;
  csv << "measurements";
  for (auto& t : tables)
    csv << ",l1_w" << t.w << "s" << t.s << ",samples_w" << t.w << "s" << t.s;
  csv << "\n";
  for (long long shots : cfg.fig5_shots) {
    SampleBatch batch =
        sample_powers(p_sampling, shots, max_power, sampling_seed, cfg.threads);
    csv << shots;
    for (auto& t : tables) {
      Distribution approx = decode_series(batch, t);
      csv << "," << fmt(l1_distance(p, approx)) << ","
          << 2ll * t.term_count() * shots;
    }
    csv << "\n";
  }

  std::ostringstream hist_csv;
  hist_csv << "weight,mass\n";
  std::vector<double> hist = hamming_histogram(p);
  for (std::size_t w = 0; w < hist.size(); ++w)
    hist_csv << w << "," << fmt(hist[w]) << "\n";

  nlohmann::json ws_meta = nlohmann::json::array();
  for (auto& t : tables)
    ws_meta.push_back(
        {{"w", t.w}, {"s", t.s}, {"terms", t.term_count()}});
  nlohmann::json meta = {{"experiment", "fig5"},
                         {"seed", cfg.seed},
                         {"n", graph.n},
                         {"rows", cfg.fig5_rows},
                         {"cols", cfg.fig5_cols},
                         {"noise", to_string(cfg.fig5_kind)},
                         {"tau", cfg.fig5_tau},
                         {"weight_cutoff", cfg.fig5_cutoff},
                         {"channel_dropped_mass", dropped},
                         {"delta", delta},
                         {"decoders", std::move(ws_meta)}};

  std::string csv_path = out_path(cfg, "fig5_accuracy.csv");
  std::string hist_path = out_path(cfg, "fig5_weight_histogram.csv");
  std::string meta_path = out_path(cfg, "fig5_meta.json");
  write_text_file(csv_path, csv.str());
  write_text_file(hist_path, hist_csv.str());
  write_text_file(meta_path, meta.dump(2) + "\n");
  return {csv_path, hist_path, meta_path};
}

}  // namespace

RunConfig default_run_config(const std::string& experiment) {
  RunConfig cfg;
  cfg.experiment = experiment;
  cfg.fig3_shots = {100,    316,    1000,    3162,   10000,
                    31623,  100000, 316228,  1000000};
  cfg.fig4_n = {4, 6, 8, 10};
  cfg.fig5_shots = {1000, 3162, 10000, 31623, 100000};
  cfg.fig5_ws = {{2, 0}, {2, 1}, {3, 0}};
  return cfg;
}

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

template <typename T>
std::vector<T> parse_list(const std::string& v) {
  std::vector<T> out;
  for (auto& tok : split(v, ','))
    out.push_back(static_cast<T>(std::stoll(trim(tok))));
  return out;
}

void apply_key(RunConfig& cfg, const std::string& key,
               const std::string& value) {
  if (key == "seed") {
    cfg.seed = std::stoull(value);
    cfg.has_seed = true;
  } else if (key == "out") {
    cfg.out_dir = value;
  } else if (key == "threads") {
    cfg.threads = std::stoi(value);
  } else if (key == "fig3.p0") {
    cfg.fig3_p0 = std::stod(value);
  } else if (key == "fig3.shots") {
    cfg.fig3_shots = parse_list<long long>(value);
  } else if (key == "fig4.n") {
    cfg.fig4_n = parse_list<int>(value);
  } else if (key == "fig4.delta") {
    cfg.fig4_delta = std::stod(value);
  } else if (key == "fig4.pairs") {
    cfg.fig4_pairs = std::stoi(value);
  } else if (key == "fig5.rows") {
    cfg.fig5_rows = std::stoi(value);
  } else if (key == "fig5.cols") {
    cfg.fig5_cols = std::stoi(value);
  } else if (key == "fig5.kind") {
    cfg.fig5_kind = noise_kind_from_string(value);
  } else if (key == "fig5.tau") {
    cfg.fig5_tau = std::stod(value);
  } else if (key == "fig5.cutoff") {
    cfg.fig5_cutoff = std::stoi(value);
  } else if (key == "fig5.shots") {
    cfg.fig5_shots = parse_list<long long>(value);
  } else if (key == "fig5.ws") {
    cfg.fig5_ws.clear();
    for (auto& tok : split(value, ',')) {
      auto parts = split(trim(tok), ':');
      if (parts.size() != 2)
        throw std::invalid_argument("config: fig5.ws entries must be w:s");
      cfg.fig5_ws.emplace_back(std::stoi(parts[0]), std::stoi(parts[1]));
    }
  } else {
    throw std::invalid_argument("config: unknown key " + key);
  }
}

}  // namespace

void apply_config_file(RunConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: expected key = value: " + line);
    apply_key(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

void validate_config(const RunConfig& cfg) {
  if (!cfg.has_seed) throw std::invalid_argument("config: seed is required");
  if (cfg.out_dir.empty())
    throw std::invalid_argument("config: output directory is required");
  auto check_increasing = [](const std::vector<long long>& v,
                             const char* name) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] <= v[i - 1])
        throw std::invalid_argument(std::string("config: ") + name +
                                    " must be strictly increasing");
  };
  if (cfg.experiment == "fig3") {
    if (cfg.fig3_shots.empty())
      throw std::invalid_argument("config: fig3.shots is empty");
    check_increasing(cfg.fig3_shots, "fig3.shots");
    if (cfg.fig3_p0 <= 0.5 || cfg.fig3_p0 >= 1.0)
      throw std::invalid_argument("config: fig3.p0 must be in (0.5, 1)");
  } else if (cfg.experiment == "fig4") {
    if (cfg.fig4_n.empty() || cfg.fig4_pairs < 1)
      throw std::invalid_argument("config: fig4 needs n list and pairs");
    for (int n : cfg.fig4_n)
      if (n < 1 || n > 16)
        throw std::invalid_argument("config: fig4.n must be within [1, 16]");
  } else if (cfg.experiment == "fig5") {
    if (cfg.fig5_shots.empty() || cfg.fig5_ws.empty())
      throw std::invalid_argument("config: fig5 needs shots and ws");
    check_increasing(cfg.fig5_shots, "fig5.shots");
  } else {
    throw std::invalid_argument("unknown experiment: " + cfg.experiment);
  }
}

std::vector<std::string> run_experiment(const RunConfig& cfg) {
  validate_config(cfg);
  std::filesystem::create_directories(cfg.out_dir);
  if (cfg.experiment == "fig3") return run_fig3(cfg);
  if (cfg.experiment == "fig4") return run_fig4(cfg);
  return run_fig5(cfg);
}

}  // namespace hgnoise

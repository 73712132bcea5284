// hgnoise: noise tailoring and detection toolkit for third-order hypergraph
// states. Subcommands cover state construction, analytic tailoring, protocol
// sampling, exact and series decoding, recovery-plan generation, dense
// protocol verification, and the bundled experiment recipes.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hgnoise/convolution.hpp"
#include "hgnoise/experiments.hpp"
#include "hgnoise/io.hpp"
#include "hgnoise/pec.hpp"
#include "hgnoise/sampler.hpp"
#include "hgnoise/series.hpp"
#include "hgnoise/solver.hpp"
#include "hgnoise/tailoring.hpp"
#include "hgnoise/verifier.hpp"

namespace {

using namespace hgnoise;

void emit(const std::string& out_file, const std::string& content) {
  if (out_file.empty())
    std::cout << content;
  else
    write_text_file(out_file, content);
}

void emit_json(const std::string& out_file, const nlohmann::json& j) {
  emit(out_file, j.dump(2) + "\n");
}

// Tailored distributions of truncated channels carry a small deficit; bring
// them back to an exact probability vector before sampling or simulating,
// and refuse anything that is not close to one.
Distribution as_probability(const Distribution& p) {
  double deficit = 1.0 - p.sum();
  if (p.min_value() < -1e-9 || std::abs(deficit) > 0.01)
    throw std::runtime_error(
        "input is not a probability distribution (deficit > 1%)");
  if (std::abs(deficit) > 1e-12) {
    std::cerr << "renormalizing input, deficit " << deficit << "\n";
    return p.normalized();
  }
  return p;
}

int run(int argc, char** argv) {
  CLI::App app{"noise tailoring and detection for hypergraph states"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  // build-state
  auto* build = app.add_subcommand("build-state", "emit a hypergraph JSON");
  std::string preset = "k4";
  int rows = 2, cols = 3;
  std::string build_out;
  build->add_option("--preset", preset, "k4 | union-jack")
      ->check(CLI::IsMember({"k4", "union-jack"}));
  build->add_option("--rows", rows, "union-jack rows");
  build->add_option("--cols", cols, "union-jack cols");
  build->add_option("--out", build_out, "output file (default stdout)");

  // tailor
  auto* tailor = app.add_subcommand(
      "tailor", "analytic dephasing distribution of a noisy state");
  std::string tailor_graph, tailor_channel, tailor_noise, tailor_out;
  double tailor_tau = 0.005;
  int tailor_cutoff = 4;
  std::string tailor_method = "local";
  tailor->add_option("--graph", tailor_graph, "hypergraph JSON")->required();
  tailor->add_option("--channel", tailor_channel, "Pauli channel JSON");
  tailor->add_option("--noise", tailor_noise,
                     "preset noise kind: depolarizing | xz | z | x");
  tailor->add_option("--tau", tailor_tau, "preset per-qubit rate");
  tailor->add_option("--cutoff", tailor_cutoff, "preset weight cutoff");
  tailor->add_option("--method", tailor_method, "local | brute")
      ->check(CLI::IsMember({"local", "brute"}));
  tailor->add_option("--out", tailor_out, "output file (default stdout)");

  // sample
  auto* sample = app.add_subcommand(
      "sample", "draw empirical convolution powers of the measurement law");
  std::string sample_p, sample_out, sample_csv;
  long long sample_shots = 0;
  int sample_maxpower = 0, sample_threads = 0;
  std::uint64_t sample_seed = 0;
  sample->add_option("--p", sample_p, "dephasing distribution JSON")
      ->required();
  sample->add_option("--shots", sample_shots, "number of shots")->required();
  sample->add_option("--max-power", sample_maxpower,
                     "highest convolution power to record");
  sample->add_option("--seed", sample_seed, "RNG seed")->required();
  sample->add_option("--threads", sample_threads, "worker threads");
  sample->add_option("--out", sample_out, "batch JSON output");
  sample->add_option("--csv", sample_csv, "batch CSV output");

  // decode exact | decode series
  auto* decode = app.add_subcommand("decode", "invert the measurement law");
  decode->require_subcommand(1);
  auto* dec_exact = decode->add_subcommand(
      "exact", "transform-domain root inversion of mu");
  std::string dec_mu, dec_exact_out;
  int dec_order = 3;
  std::string dec_negatives = "clamp";
  dec_exact->add_option("--mu", dec_mu, "measurement distribution JSON")
      ->required();
  dec_exact->add_option("--order", dec_order, "generating-gate order k");
  dec_exact->add_option("--negatives", dec_negatives, "clamp | error")
      ->check(CLI::IsMember({"clamp", "error"}));
  dec_exact->add_option("--out", dec_exact_out, "output file");
  auto* dec_series = decode->add_subcommand(
      "series", "truncated convolution-series decoder");
  std::string dec_batch, dec_series_out;
  int dec_w = 2, dec_s = 0;
  dec_series->add_option("--batch", dec_batch, "sample batch JSON")
      ->required();
  dec_series->add_option("--w", dec_w, "series order w")->required();
  dec_series->add_option("--s", dec_s, "series order s");
  dec_series->add_option("--out", dec_series_out, "output file");

  // coeffs
  auto* coeffs = app.add_subcommand(
      "coeffs", "series-decoder coefficients as exact fractions");
  int coeffs_w = 2, coeffs_s = 0;
  std::string coeffs_out;
  coeffs->add_option("--w", coeffs_w, "series order w")->required();
  coeffs->add_option("--s", coeffs_s, "series order s");
  coeffs->add_option("--out", coeffs_out, "output file (default stdout)");

  // pec
  auto* pec = app.add_subcommand(
      "pec", "quasi-probability recovery plan for a dephasing channel");
  std::string pec_p, pec_out;
  bool pec_exact_flag = false, pec_approx_flag = false;
  double pec_eps = 0.01, pec_delta_f = 0.01;
  pec->add_option("--p", pec_p, "dephasing distribution JSON")->required();
  pec->add_flag("--exact", pec_exact_flag, "exact spectral inverse");
  pec->add_flag("--approx", pec_approx_flag, "first-order inverse");
  pec->add_option("--epsilon", pec_eps, "target accuracy for the overhead");
  pec->add_option("--delta-f", pec_delta_f, "failure probability");
  pec->add_option("--out", pec_out, "output file (default stdout)");

  // verify-protocol
  auto* verify = app.add_subcommand(
      "verify-protocol", "dense check of twirl and two-copy circuit (n <= 4)");
  std::string verify_graph, verify_p, verify_channel, verify_out;
  verify->add_option("--graph", verify_graph, "hypergraph JSON")->required();
  verify->add_option("--p", verify_p,
                     "dephasing distribution JSON (two-copy check)");
  verify->add_option("--channel", verify_channel,
                     "Pauli channel JSON (twirl check)");
  verify->add_option("--out", verify_out, "report file (default stdout)");

  // experiment
  auto* experiment = app.add_subcommand("experiment", "run a bundled study");
  std::string exp_name, exp_out, exp_config;
  std::uint64_t exp_seed = 0;
  int exp_threads = 0;
  experiment->add_option("name", exp_name, "fig3 | fig4 | fig5")->required();
  experiment->add_option("--seed", exp_seed, "RNG seed")->required();
  experiment->add_option("--out", exp_out, "output directory")->required();
  experiment->add_option("--config", exp_config, "key = value overrides");
  experiment->add_option("--threads", exp_threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help();
      return 0;
    }
    std::cerr << e.what() << "\n" << app.help();
    return 2;
  }

  if (build->parsed()) {
    Hypergraph g = preset == "k4" ? build_k4() : build_union_jack(rows, cols);
    emit_json(build_out, to_json(g));
    return 0;
  }

  if (tailor->parsed()) {
    Hypergraph g = hypergraph_from_json(load_json_file(tailor_graph));
    PauliChannel channel;
    double dropped = 0.0;
    if (!tailor_channel.empty()) {
      channel = channel_from_json(load_json_file(tailor_channel));
    } else if (!tailor_noise.empty()) {
      channel = preset_local(g.n, g, noise_kind_from_string(tailor_noise),
                             tailor_tau, tailor_cutoff, &dropped);
    } else {
      std::cerr << "tailor: need --channel or --noise\n";
      return 2;
    }
    Distribution p = tailored_distribution(
        g, channel,
        tailor_method == "brute" ? TailorMethod::brute : TailorMethod::local);
    std::cerr << "kept_mass=" << p.sum() << " delta=" << p.infidelity()
              << " dropped_mass=" << dropped << "\n";
    emit_json(tailor_out, to_json(p));
    return 0;
  }

  if (sample->parsed()) {
    Distribution p = distribution_from_json(load_json_file(sample_p));
    SampleBatch batch = sample_powers(p, sample_shots, sample_maxpower,
                                      sample_seed, sample_threads);
    if (sample_out.empty() && sample_csv.empty())
      emit_json("", to_json(batch));
    if (!sample_out.empty()) emit_json(sample_out, to_json(batch));
    if (!sample_csv.empty()) emit(sample_csv, batch_to_csv(batch));
    return 0;
  }

  if (dec_exact->parsed()) {
    Distribution mu = distribution_from_json(load_json_file(dec_mu));
    ExactSolution sol = solve_exact(mu, dec_order,
                                    dec_negatives == "clamp"
                                        ? NegativePolicy::clamp
                                        : NegativePolicy::error);
    if (sol.clamped > 0)
      std::cerr << "clamped " << sol.clamped << " spectrum entries\n";
    emit_json(dec_exact_out, to_json(sol.p));
    return 0;
  }

  if (dec_series->parsed()) {
    SampleBatch batch = batch_from_json(load_json_file(dec_batch));
    CoeffTable table = series_coefficients(dec_w, dec_s);
    emit_json(dec_series_out, to_json(decode_series(batch, table)));
    return 0;
  }

  if (coeffs->parsed()) {
    CoeffTable table = series_coefficients(coeffs_w, coeffs_s);
    std::ostringstream os;
    os << "j,numerator,denominator,float\n";
    for (int j = 0; j < table.term_count(); ++j) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", table.coeffs_f[j]);
      os << j << "," << numerator(table.coeffs[j]) << ","
         << denominator(table.coeffs[j]) << "," << buf << "\n";
    }
    emit(coeffs_out, os.str());
    return 0;
  }

  if (pec->parsed()) {
    if (pec_exact_flag == pec_approx_flag) {
      std::cerr << "pec: choose exactly one of --exact / --approx\n";
      return 2;
    }
    Distribution p = distribution_from_json(load_json_file(pec_p));
    PecPlan plan = pec_exact_flag ? pec_exact(p) : pec_approx(p);
    nlohmann::json j = to_json(plan);
    j["overhead"] = pec_overhead(plan, pec_eps, pec_delta_f);
    j["epsilon"] = pec_eps;
    j["delta_f"] = pec_delta_f;
    emit_json(pec_out, j);
    return 0;
  }

  if (verify->parsed()) {
    Hypergraph g = hypergraph_from_json(load_json_file(verify_graph));
    if (verify_p.empty() && verify_channel.empty()) {
      std::cerr << "verify-protocol: need --p and/or --channel\n";
      return 2;
    }
    nlohmann::json report;
    bool pass = true;
    if (!verify_channel.empty()) {
      PauliChannel c = channel_from_json(load_json_file(verify_channel));
      TwirlReport r = verify_twirl(g, c);
      report["twirl"] = {{"max_offdiag", r.max_offdiag},
                         {"max_diag_shift", r.max_diag_shift},
                         {"max_vs_analytic", r.max_vs_analytic},
                         {"pass", r.pass}};
      pass = pass && r.pass;
    }
    if (!verify_p.empty()) {
      Distribution p = distribution_from_json(load_json_file(verify_p));
      TwoCopyReport r = verify_two_copy(g, p);
      report["two_copy"] = {
          {"max_outcome_dev", r.max_outcome_dev},
          {"max_l1_vs_convolution", r.max_l1_vs_convolution},
          {"max_l1_across_outcomes", r.max_l1_across_outcomes},
          {"phase_fix_clifford_only", r.phase_fix_clifford_only},
          {"pass", r.pass}};
      pass = pass && r.pass;
    }
    report["pass"] = pass;
    emit_json(verify_out, report);
    return pass ? 0 : 1;
  }

  if (experiment->parsed()) {
    RunConfig cfg = default_run_config(exp_name);
    if (!exp_config.empty()) apply_config_file(cfg, exp_config);
    cfg.seed = exp_seed;
    cfg.has_seed = true;
    cfg.out_dir = exp_out;
    if (exp_threads > 0) cfg.threads = exp_threads;
    for (const auto& path : run_experiment(cfg))
      std::cout << path << "\n";
    return 0;
  }

  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}

#include "hgnoise/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace hgnoise {

std::string mask_to_hex(mask_t m) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "0x%x", m);
  return buf;
}

mask_t mask_from_hex(const std::string& s) {
  std::size_t pos = 0;
  unsigned long v = std::stoul(s, &pos, 16);
  if (pos != s.size() || v > 0xFFFFFFFFul)
    throw std::invalid_argument("bad mask literal: " + s);
  return static_cast<mask_t>(v);
}

static mask_t mask_field(const nlohmann::json& j) {
  if (j.is_string()) return mask_from_hex(j.get<std::string>());
  return j.get<mask_t>();
}

nlohmann::json to_json(const Hypergraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (mask_t e : g.edges) {
    nlohmann::json verts = nlohmann::json::array();
    for (int v = 1; v <= g.n; ++v)
      if (e & qubit_bit(v)) verts.push_back(v);
    edges.push_back(std::move(verts));
  }
  return {{"n", g.n}, {"edges", std::move(edges)}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<mask_t> masks;
  for (const auto& edge : j.at("edges")) {
    mask_t m = 0;
    for (const auto& v : edge) {
      int vertex = v.get<int>();
      if (vertex < 1 || vertex > n)
        throw std::invalid_argument("hypergraph JSON: vertex out of range");
      m |= qubit_bit(vertex);
    }
    masks.push_back(m);
  }
  return Hypergraph::from_edge_masks(n, std::move(masks));
}

nlohmann::json to_json(const PauliChannel& c) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& t : c.terms)
    terms.push_back({{"bx", mask_to_hex(t.bx)},
                     {"bz", mask_to_hex(t.bz)},
                     {"rate", t.rate}});
  return {{"n", c.n}, {"terms", std::move(terms)}};
}

PauliChannel channel_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::vector<PauliTerm> terms;
  for (const auto& t : j.at("terms"))
    terms.push_back({mask_field(t.at("bx")), mask_field(t.at("bz")),
                     t.at("rate").get<double>()});
  return PauliChannel::from_terms(n, std::move(terms));
}

nlohmann::json to_json(const Distribution& d) {
  nlohmann::json entries = nlohmann::json::array();
  for (auto& [m, v] : d.entries)
    entries.push_back({{"mask", mask_to_hex(m)}, {"value", v}});
  return {{"n", d.n},
          {"kind", d.kind == Distribution::Kind::prob ? "prob" : "quasi"},
          {"entries", std::move(entries)}};
}

Distribution distribution_from_json(const nlohmann::json& j) {
  int n = j.at("n").get<int>();
  std::string kind_s = j.at("kind").get<std::string>();
  Distribution::Kind kind;
  if (kind_s == "prob")
    kind = Distribution::Kind::prob;
  else if (kind_s == "quasi")
    kind = Distribution::Kind::quasi;
  else
    throw std::invalid_argument("distribution JSON: bad kind " + kind_s);
  std::vector<std::pair<mask_t, double>> entries;
  for (const auto& e : j.at("entries"))
    entries.emplace_back(mask_field(e.at("mask")),
                         e.at("value").get<double>());
  return Distribution::from_entries(n, kind, std::move(entries));
}

nlohmann::json to_json(const SampleBatch& b) {
  nlohmann::json powers = nlohmann::json::array();
  for (int j = 0; j <= b.max_power; ++j) {
    nlohmann::json counts = nlohmann::json::array();
    for (auto& [m, c] : b.counts[j])
      counts.push_back({{"mask", mask_to_hex(m)}, {"count", c}});
    powers.push_back({{"j", j}, {"counts", std::move(counts)}});
  }
  return {{"n", b.n},
          {"seed", b.seed},
          {"shots", b.shots},
          {"max_power", b.max_power},
          {"powers", std::move(powers)}};
}

SampleBatch batch_from_json(const nlohmann::json& j) {
  SampleBatch b;
  b.n = j.at("n").get<int>();
  b.seed = j.at("seed").get<std::uint64_t>();
  b.shots = j.at("shots").get<long long>();
  b.max_power = j.at("max_power").get<int>();
  b.counts.resize(b.max_power + 1);
  for (const auto& p : j.at("powers")) {
    int idx = p.at("j").get<int>();
    if (idx < 0 || idx > b.max_power)
      throw std::invalid_argument("batch JSON: power index out of range");
    for (const auto& e : p.at("counts"))
      b.counts[idx].emplace_back(mask_field(e.at("mask")),
                                 e.at("count").get<long long>());
  }
  return b;
}

std::string batch_to_csv(const SampleBatch& b) {
  std::ostringstream os;
  os << "# seed=" << b.seed << " shots=" << b.shots << " n=" << b.n << "\n";
  os << "power,mask,count\n";
  for (int j = 0; j <= b.max_power; ++j)
    for (auto& [m, c] : b.counts[j])
      os << j << "," << mask_to_hex(m) << "," << c << "\n";
  return os.str();
}

nlohmann::json to_json(const PecPlan& p) {
  return {{"kind", p.kind == PecPlan::Kind::exact ? "exact" : "approx"},
          {"l1_norm", p.l1_norm},
          {"q", to_json(p.q)}};
}

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  nlohmann::json j;
  in >> j;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace hgnoise

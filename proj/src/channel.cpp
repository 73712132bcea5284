#include "hgnoise/channel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgnoise {

static bool term_order(const PauliTerm& a, const PauliTerm& b) {
  return a.bx != b.bx ? a.bx < b.bx : a.bz < b.bz;
}

PauliChannel PauliChannel::from_terms(int n, std::vector<PauliTerm> terms) {
  if (n < 0 || n > kMaxQubits)
    throw std::invalid_argument("PauliChannel: n out of range");
  for (auto& t : terms) {
    if ((t.bx | t.bz) & ~full_mask(n))
      throw std::invalid_argument("PauliChannel: mask exceeds n qubits");
    if (t.rate < 0.0 || t.rate > 1.0)
      throw std::invalid_argument("PauliChannel: rate outside [0,1]");
  }
  std::sort(terms.begin(), terms.end(), term_order);
  std::vector<PauliTerm> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().bx == t.bx && merged.back().bz == t.bz)
      merged.back().rate += t.rate;
    else
      merged.push_back(t);
  }
  std::erase_if(merged, [](const PauliTerm& t) { return t.rate == 0.0; });
  return PauliChannel{n, std::move(merged)};
}

PauliChannel PauliChannel::identity(int n) {
  return PauliChannel::from_terms(n, {{0, 0, 1.0}});
}

double PauliChannel::total_rate() const {
  double s = 0.0;
  for (auto& t : terms) s += t.rate;
  return s;
}

double PauliChannel::identity_rate() const {
  for (auto& t : terms)
    if (t.bx == 0 && t.bz == 0) return t.rate;
  return 0.0;
}

bool PauliChannel::is_normalized(double tol) const {
  return std::abs(total_rate() - 1.0) <= tol;
}

void PauliChannel::validate(double tol) const {
  if (!is_normalized(tol))
    throw std::runtime_error("PauliChannel: rates do not sum to 1");
  if (identity_rate() == 0.0)
    throw std::runtime_error("PauliChannel: identity term missing");
}

NoiseKind noise_kind_from_string(const std::string& s) {
  if (s == "depolarizing") return NoiseKind::depolarizing;
  if (s == "xz") return NoiseKind::xz;
  if (s == "z") return NoiseKind::z;
  if (s == "x") return NoiseKind::x;
  throw std::invalid_argument("unknown noise kind: " + s);
}

std::string to_string(NoiseKind k) {
  switch (k) {
    case NoiseKind::depolarizing: return "depolarizing";
    case NoiseKind::xz: return "xz";
    case NoiseKind::z: return "z";
    case NoiseKind::x: return "x";
  }
  return "?";
}

namespace {

struct SingleQubitOption {
  bool x, z;     // error component on this qubit
  double rate;
};

std::vector<SingleQubitOption> qubit_options(NoiseKind kind, double tau) {
  switch (kind) {
    case NoiseKind::depolarizing:
      return {{false, false, 1.0 - tau},
              {true, false, tau / 3.0},
              {true, true, tau / 3.0},
              {false, true, tau / 3.0}};
    case NoiseKind::z:
      return {{false, false, 1.0 - tau}, {false, true, tau}};
    case NoiseKind::x:
      return {{false, false, 1.0 - tau}, {true, false, tau}};
    case NoiseKind::xz:
      return {{false, false, (1.0 - tau) * (1.0 - tau)},
              {true, false, tau * (1.0 - tau)},
              {false, true, tau * (1.0 - tau)},
              {true, true, tau * tau}};
  }
  throw std::logic_error("unreachable");
}

void expand(const std::vector<int>& qubits, std::size_t idx,
            const std::vector<SingleQubitOption>& opts, int weight_cutoff,
            PauliTerm cur, int cur_weight, std::vector<PauliTerm>& out,
            double& dropped) {
  if (cur_weight >= weight_cutoff) {
    // every continuation keeps weight >= cutoff; its conditional mass is 1
    dropped += cur.rate;
    return;
  }
  if (idx == qubits.size()) {
    out.push_back(cur);
    return;
  }
  mask_t bit = qubit_bit(qubits[idx]);
  for (const auto& o : opts) {
    PauliTerm next = cur;
    next.rate *= o.rate;
    if (next.rate == 0.0) continue;
    if (o.x) next.bx |= bit;
    if (o.z) next.bz |= bit;
    expand(qubits, idx + 1, opts, weight_cutoff, next,
           cur_weight + ((o.x || o.z) ? 1 : 0), out, dropped);
  }
}

}  // namespace

PauliChannel preset_local(int n, const Hypergraph& graph, NoiseKind kind,
                          double tau, int weight_cutoff, double* dropped_mass) {
  if (tau < 0.0 || tau > 1.0)
    throw std::invalid_argument("preset_local: tau outside [0,1]");
  if (graph.n > n)
    throw std::invalid_argument("preset_local: graph larger than channel");
  if (weight_cutoff < 1)
    throw std::invalid_argument("preset_local: weight_cutoff must be >= 1");
  std::vector<int> qubits;
  mask_t cov = graph.covered_vertices();
  for (int q = 1; q <= n; ++q)
    if (cov & qubit_bit(q)) qubits.push_back(q);

  std::vector<PauliTerm> terms;
  double dropped = 0.0;
  expand(qubits, 0, qubit_options(kind, tau), weight_cutoff,
         PauliTerm{0, 0, 1.0}, 0, terms, dropped);
  if (dropped_mass) *dropped_mass = dropped;
  return PauliChannel::from_terms(n, std::move(terms));
}

PauliChannel compose(const PauliChannel& c1, const PauliChannel& c2) {
  if (c1.n != c2.n) throw std::invalid_argument("compose: size mismatch");
  std::vector<PauliTerm> terms;
  terms.reserve(c1.terms.size() * c2.terms.size());
  for (auto& a : c1.terms)
    for (auto& b : c2.terms)
      terms.push_back({a.bx ^ b.bx, a.bz ^ b.bz, a.rate * b.rate});
  PauliChannel out = PauliChannel::from_terms(c1.n, std::move(terms));
  double total = out.total_rate();
  if (total > 0.0 && total != 1.0)
    for (auto& t : out.terms) t.rate /= total;
  return out;
}

TruncatedChannel truncate_by_weight(const PauliChannel& c, int k) {
  if (k < 0) throw std::invalid_argument("truncate_by_weight: K must be >= 0");
  PauliChannel kept{c.n, {}};
  double dropped = 0.0;
  for (auto& t : c.terms) {
    if (t.error_weight() < k)
      kept.terms.push_back(t);
    else
      dropped += t.rate;
  }
  return {std::move(kept), dropped};
}

double tail_bound(int n, double tau, int k) {
  if (n < 1 || tau < 0.0 || k < 0) throw std::invalid_argument("tail_bound");
  if (static_cast<double>(n) * n * tau >= 1.0)
    throw std::domain_error("tail_bound: requires n^2 tau < 1");
  if (k == 0) return 1.0;  // vacuous
  return n * std::pow(static_cast<double>(n) * n * tau, k);
}

}  // namespace hgnoise

#include "hgnoise/solver.hpp"

#include <cmath>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "hgnoise/kernels.hpp"

namespace hgnoise {

namespace {

constexpr int kDenseCap = 24;

void check_order(int order) {
  if (order < 2 || order > 8)
    throw std::invalid_argument("solve_exact: order must be in [2, 8]");
}

// Shared dense inversion on a vector indexed by already-chosen coordinates.
ExactSolution invert_dense(std::vector<double> v, int n_eff, int order,
                           NegativePolicy neg, int true_n,
                           const std::vector<mask_t>* coord_to_mask) {
  fwht(v);
  int root_halvings = order - 2;
  int clamped = 0;
  if (root_halvings > 0) {
    std::vector<mask_t> offending;
    for (std::size_t b = 0; b < v.size(); ++b) {
      if (v[b] < 0.0) {
        if (neg == NegativePolicy::error) {
          if (offending.size() < 8) offending.push_back(static_cast<mask_t>(b));
        } else {
          v[b] = 0.0;
          ++clamped;
        }
      }
    }
    if (!offending.empty()) {
      std::ostringstream msg;
      msg << "solve_exact: negative transform entries at";
      for (mask_t b : offending) msg << " 0x" << std::hex << b;
      throw std::runtime_error(msg.str());
    }
    for (int h = 0; h < root_halvings; ++h)
      for (double& x : v) x = std::sqrt(x);
  }
  fwht(v);
  double scale = std::ldexp(1.0, -n_eff);
  for (double& x : v) x *= scale;

  Distribution p;
  if (!coord_to_mask) {
    p = Distribution::from_dense(true_n, v, Distribution::Kind::quasi);
  } else {
    std::vector<std::pair<mask_t, double>> e;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (v[c] != 0.0) e.emplace_back((*coord_to_mask)[c], v[c]);
    p = Distribution::from_entries(true_n, Distribution::Kind::quasi,
                                   std::move(e));
  }
  return {std::move(p), clamped};
}

// GF(2) row echelon with combination tracking, used to coordinatize masks
// over an independent basis.
struct Gf2Basis {
  std::vector<mask_t> ech;   // echelonized vectors
  std::vector<mask_t> comb;  // which original vectors each row combines
  std::vector<int> pivot;

  static Gf2Basis build(std::span<const mask_t> basis) {
    Gf2Basis g;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      mask_t r = basis[i];
      mask_t c = mask_t{1} << i;
      for (std::size_t j = 0; j < g.ech.size(); ++j) {
        if (r >> g.pivot[j] & 1) {
          r ^= g.ech[j];
          c ^= g.comb[j];
        }
      }
      if (r == 0)
        throw std::invalid_argument(
            "solve_exact_subspace: basis is not independent");
      g.ech.push_back(r);
      g.comb.push_back(c);
      g.pivot.push_back(31 - std::countl_zero(r));
    }
    return g;
  }

  std::optional<mask_t> coords(mask_t m) const {
    mask_t c = 0;
    for (std::size_t j = 0; j < ech.size(); ++j) {
      if (m >> pivot[j] & 1) {
        m ^= ech[j];
        c ^= comb[j];
      }
    }
    if (m != 0) return std::nullopt;
    return c;
  }
};

}  // namespace

ExactSolution solve_exact(const Distribution& mu, int order,
                          NegativePolicy neg) {
  check_order(order);
  if (mu.n > kDenseCap)
    throw std::invalid_argument("solve_exact: dense path capped at n = 24");
  return invert_dense(mu.to_dense(), mu.n, order, neg, mu.n, nullptr);
}

ExactSolution solve_exact_subspace(const Distribution& mu,
                                   std::span<const mask_t> basis, int order,
                                   NegativePolicy neg) {
  check_order(order);
  if (basis.empty() || basis.size() > kDenseCap)
    throw std::invalid_argument(
        "solve_exact_subspace: basis dimension must be in [1, 24]");
  Gf2Basis g = Gf2Basis::build(basis);

  std::vector<double> v(std::size_t{1} << basis.size(), 0.0);
  for (auto& [m, val] : mu.entries) {
    auto c = g.coords(m);
    if (!c)
      throw std::runtime_error(
          "solve_exact_subspace: mu has support outside span(basis)");
    v[*c] = val;
  }

  std::vector<mask_t> coord_to_mask(v.size(), 0);
  for (std::size_t c = 0; c < v.size(); ++c) {
    mask_t m = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (c >> i & 1) m ^= basis[i];
    coord_to_mask[c] = m;
  }
  return invert_dense(std::move(v), static_cast<int>(basis.size()), order, neg,
                      mu.n, &coord_to_mask);
}

}  // namespace hgnoise

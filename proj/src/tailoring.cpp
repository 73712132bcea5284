#include "hgnoise/tailoring.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "hgnoise/kernels.hpp"

namespace hgnoise {

namespace {

constexpr int kBruteCap = 20;
constexpr int kComponentCap = 26;
constexpr int kDenseAccumulateCap = 22;

// Walsh spectrum data of one derivative polynomial P(.|bx), factored over the
// connected components of its nonlinear variable set.
struct SpectrumComponent {
  mask_t vars = 0;  // global bits of this component
  // nonzero squared coefficients, keyed by the v-bits embedded at `vars`
  std::vector<std::pair<mask_t, double>> spectrum;
};

struct LocalSpectrum {
  mask_t nonlinear_vars = 0;  // union of component vars
  mask_t forced = 0;          // required v-bits outside nonlinear_vars
  std::vector<SpectrumComponent> comps;
};

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

LocalSpectrum build_local_spectrum(const BoolPoly& poly, mask_t bx) {
  BoolPoly d = directional_derivative(poly, bx);

  LocalSpectrum out;
  std::vector<mask_t> nonlinear;
  std::vector<mask_t> linear;
  for (mask_t m : d.monomials) {
    int w = weight(m);
    if (w == 0) continue;  // constant: irrelevant after squaring
    if (w == 1)
      linear.push_back(m);
    else {
      nonlinear.push_back(m);
      out.nonlinear_vars |= m;
    }
  }
  for (mask_t m : linear) {
    if (m & out.nonlinear_vars)
      nonlinear.push_back(m);  // folded into its component's polynomial
    else
      out.forced |= m;
  }
  if (!out.nonlinear_vars) return out;

  // connected components of co-occurring nonlinear variables
  std::vector<int> bits;
  for (int b = 0; b < poly.n; ++b)
    if (out.nonlinear_vars >> b & 1) bits.push_back(b);
  std::vector<int> parent(bits.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto bit_index = [&](int b) {
    return static_cast<int>(std::lower_bound(bits.begin(), bits.end(), b) -
                            bits.begin());
  };
  for (mask_t m : nonlinear) {
    int first = -1;
    for (int b = 0; b < poly.n; ++b) {
      if (!(m >> b & 1)) continue;
      if (first < 0)
        first = bit_index(b);
      else
        parent[find_root(parent, bit_index(b))] = find_root(parent, first);
    }
  }

  std::unordered_map<int, std::size_t> comp_of_root;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    int r = find_root(parent, static_cast<int>(i));
    auto [it, fresh] = comp_of_root.try_emplace(r, out.comps.size());
    if (fresh) out.comps.push_back({});
    out.comps[it->second].vars |= mask_t{1} << bits[i];
  }

  for (auto& comp : out.comps) {
    int k = weight(comp.vars);
    if (k > kComponentCap)
      throw std::runtime_error(
          "tailoring: nonlinear neighborhood too large for the local path");
    std::vector<int> comp_bits;
    for (int b = 0; b < poly.n; ++b)
      if (comp.vars >> b & 1) comp_bits.push_back(b);

    // component polynomial with variables renumbered to 0..k-1
    std::vector<mask_t> local_monos;
    for (mask_t m : nonlinear) {
      if (!(m & comp.vars)) continue;
      mask_t lm = 0;
      for (int i = 0; i < k; ++i)
        if (m >> comp_bits[i] & 1) lm |= mask_t{1} << i;
      local_monos.push_back(lm);
    }
    BoolPoly q = BoolPoly::from_monomials(k, std::move(local_monos));

    std::vector<double> vec(std::size_t{1} << k);
    for (std::size_t c = 0; c < vec.size(); ++c)
      vec[c] = eval(q, static_cast<mask_t>(c)) ? -1.0 : 1.0;
    fwht(vec);  // vec[v] = sum_c (-1)^{q(c) + v.c}, an exact integer

    double scale = std::ldexp(1.0, -k);
    comp.spectrum.reserve(vec.size());
    for (std::size_t v = 0; v < vec.size(); ++v) {
      if (vec[v] == 0.0) continue;
      double w = vec[v] * scale;
      mask_t embedded = 0;
      for (int i = 0; i < k; ++i)
        if (v >> i & 1) embedded |= mask_t{1} << comp_bits[i];
      comp.spectrum.emplace_back(embedded, w * w);
    }
    std::sort(comp.spectrum.begin(), comp.spectrum.end());
  }
  return out;
}

double overlap_sq_local(const BoolPoly& poly, mask_t bx, mask_t v) {
  LocalSpectrum spec = build_local_spectrum(poly, bx);
  mask_t outside = full_mask(poly.n) & ~spec.nonlinear_vars;
  if ((v & outside) != spec.forced) return 0.0;
  double w2 = 1.0;
  for (const auto& comp : spec.comps) {
    mask_t key = v & comp.vars;
    auto it = std::lower_bound(
        comp.spectrum.begin(), comp.spectrum.end(), key,
        [](const auto& kv, mask_t k) { return kv.first < k; });
    if (it == comp.spectrum.end() || it->first != key) return 0.0;
    w2 *= it->second;
  }
  return w2;
}

double overlap_sq_brute(const BoolPoly& poly, mask_t bx, mask_t v) {
  if (poly.n > kBruteCap)
    throw std::invalid_argument("overlap_sq: brute path capped at n = 20");
  BoolPoly d = directional_derivative(poly, bx);
  long long acc = 0;
  mask_t lim = full_mask(poly.n);
  for (mask_t c = 0;; ++c) {
    acc += (eval(d, c) ^ dot(v, c)) ? -1 : 1;
    if (c == lim) break;
  }
  double w = std::ldexp(static_cast<double>(acc), -poly.n);
  return w * w;
}

// Shared accumulator: dense array for small n, hash map beyond.
struct Accumulator {
  explicit Accumulator(int n) : n(n) {
    if (n <= kDenseAccumulateCap) dense.assign(std::size_t{1} << n, 0.0);
  }
  void add(mask_t a, double v) {
    if (!dense.empty())
      dense[a] += v;
    else
      sparse[a] += v;
  }
  Distribution take(Distribution::Kind kind) {
    if (!dense.empty()) return Distribution::from_dense(n, dense, kind);
    std::vector<std::pair<mask_t, double>> e(sparse.begin(), sparse.end());
    return Distribution::from_entries(n, kind, std::move(e));
  }
  int n;
  std::vector<double> dense;
  std::unordered_map<mask_t, double> sparse;
};

void enumerate_products(const LocalSpectrum& spec, std::size_t comp_idx,
                        mask_t v_acc, double w2_acc,
                        std::vector<std::pair<mask_t, double>>& out) {
  if (comp_idx == spec.comps.size()) {
    out.emplace_back(v_acc, w2_acc);
    return;
  }
  for (const auto& [v, w2] : spec.comps[comp_idx].spectrum)
    enumerate_products(spec, comp_idx + 1, v_acc | v, w2_acc * w2, out);
}

}  // namespace

double overlap_sq(const Hypergraph& g, mask_t bx, mask_t bz_plus_a,
                  TailorMethod method) {
  BoolPoly poly = poly_from_graph(g);
  return method == TailorMethod::brute
             ? overlap_sq_brute(poly, bx, bz_plus_a)
             : overlap_sq_local(poly, bx, bz_plus_a);
}

Distribution tailored_distribution(const Hypergraph& g, const PauliChannel& c,
                                   TailorMethod method) {
  if (c.n != g.n)
    throw std::invalid_argument("tailored_distribution: channel/graph size");
  BoolPoly poly = poly_from_graph(g);
  Accumulator acc(g.n);

  if (method == TailorMethod::brute) {
    if (g.n > kBruteCap)
      throw std::invalid_argument(
          "tailored_distribution: brute path capped at n = 20");
    std::size_t dim = std::size_t{1} << g.n;
    std::vector<double> vec(dim);
    // terms are sorted by bx, so each derivative spectrum is built once
    for (std::size_t i = 0; i < c.terms.size();) {
      mask_t bx = c.terms[i].bx;
      BoolPoly d = directional_derivative(poly, bx);
      for (std::size_t x = 0; x < dim; ++x)
        vec[x] = eval(d, static_cast<mask_t>(x)) ? -1.0 : 1.0;
      fwht(vec);
      double scale = std::ldexp(1.0, -g.n);
      for (; i < c.terms.size() && c.terms[i].bx == bx; ++i) {
        for (std::size_t a = 0; a < dim; ++a) {
          double w = vec[static_cast<mask_t>(a) ^ c.terms[i].bz] * scale;
          if (w != 0.0) acc.add(static_cast<mask_t>(a), c.terms[i].rate * w * w);
        }
      }
    }
    return acc.take(Distribution::Kind::prob);
  }

  std::vector<std::pair<mask_t, double>> products;
  for (std::size_t i = 0; i < c.terms.size();) {
    mask_t bx = c.terms[i].bx;
    LocalSpectrum spec = build_local_spectrum(poly, bx);
    products.clear();
    enumerate_products(spec, 0, spec.forced, 1.0, products);
    for (; i < c.terms.size() && c.terms[i].bx == bx; ++i)
      for (const auto& [v, w2] : products)
        acc.add(v ^ c.terms[i].bz, c.terms[i].rate * w2);
  }
  return acc.take(Distribution::Kind::prob);
}

std::vector<mask_t> dominant_support(const Distribution& p, double epsilon) {
  if (epsilon <= 0.0 || epsilon >= 1.0)
    throw std::invalid_argument("dominant_support: epsilon must be in (0,1)");
  std::vector<std::pair<mask_t, double>> sorted = p.entries;
  std::sort(sorted.begin(), sorted.end(), [](auto& a, auto& b) {
    return a.second != b.second ? a.second > b.second : a.first < b.first;
  });
  std::vector<mask_t> out{0};
  double mass = p.value(0);
  double target = 1.0 - epsilon;
  for (auto& [m, v] : sorted) {
    if (mass >= target) break;
    if (m == 0) continue;
    out.push_back(m);
    mass += v;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hgnoise

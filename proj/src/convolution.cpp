#include "hgnoise/convolution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "hgnoise/kernels.hpp"

namespace hgnoise {

static Distribution::Kind joint_kind(const Distribution& a,
                                     const Distribution& b) {
  return (a.kind == Distribution::Kind::prob &&
          b.kind == Distribution::Kind::prob)
             ? Distribution::Kind::prob
             : Distribution::Kind::quasi;
}

static Distribution convolve_sparse(const Distribution& d1,
                                    const Distribution& d2) {
  std::unordered_map<mask_t, double> acc;
  acc.reserve(d1.entries.size() * 2);
  for (auto& [m1, v1] : d1.entries)
    for (auto& [m2, v2] : d2.entries) acc[m1 ^ m2] += v1 * v2;
  std::vector<std::pair<mask_t, double>> e(acc.begin(), acc.end());
  return Distribution::from_entries(d1.n, joint_kind(d1, d2), std::move(e));
}

static Distribution convolve_dense(const Distribution& d1,
                                   const Distribution& d2) {
  std::vector<double> a = d1.to_dense();
  std::vector<double> b = d2.to_dense();
  fwht(a);
  fwht(b);
  pointwise_mul(a, b, a);
  fwht(a);
  double scale = 1.0 / static_cast<double>(a.size());
  for (double& x : a) x *= scale;
  return Distribution::from_dense(d1.n, a, joint_kind(d1, d2));
}

Distribution convolve(const Distribution& d1, const Distribution& d2) {
  if (d1.n != d2.n) throw std::invalid_argument("convolve: length mismatch");
  double sparse_cost =
      static_cast<double>(d1.entries.size()) * d2.entries.size();
  double dense_cost = d1.n * std::ldexp(3.0, d1.n);
  if (d1.n > 26 || sparse_cost <= dense_cost) return convolve_sparse(d1, d2);
  return convolve_dense(d1, d2);
}

Distribution convolution_power_exact(const Distribution& mu, int j) {
  if (j < 0) throw std::invalid_argument("convolution power: j must be >= 0");
  int factors = j + 1;
  // Transform-domain exponentiation when the dense vector is affordable and
  // the support is not tiny.
  double sparse_cost = std::pow(static_cast<double>(mu.entries.size()),
                                std::min(factors, 3));
  if (mu.n <= 26 && sparse_cost > std::ldexp(1.0, mu.n)) {
    std::vector<double> f = mu.to_dense();
    fwht(f);
    std::vector<double> r(f.size(), 1.0);
    // elementwise f^factors by binary powering
    std::vector<double> base = f;
    int e = factors;
    while (e > 0) {
      if (e & 1) pointwise_mul(r, base, r);
      e >>= 1;
      if (e) pointwise_mul(base, base, base);
    }
    fwht(r);
    double scale = 1.0 / static_cast<double>(r.size());
    for (double& x : r) x *= scale;
    return Distribution::from_dense(mu.n, r, mu.kind);
  }
  Distribution out = mu;
  for (int i = 1; i < factors; ++i) out = convolve(out, mu);
  return out;
}

// Applies f over the union support of the two sorted entry lists.
template <typename F>
static void for_union(const Distribution& d1, const Distribution& d2, F&& f) {
  auto i1 = d1.entries.begin(), e1 = d1.entries.end();
  auto i2 = d2.entries.begin(), e2 = d2.entries.end();
  while (i1 != e1 || i2 != e2) {
    if (i2 == e2 || (i1 != e1 && i1->first < i2->first)) {
      f(i1->second, 0.0);
      ++i1;
    } else if (i1 == e1 || i2->first < i1->first) {
      f(0.0, i2->second);
      ++i2;
    } else {
      f(i1->second, i2->second);
      ++i1;
      ++i2;
    }
  }
}

double l1_distance(const Distribution& d1, const Distribution& d2) {
  if (d1.n != d2.n) throw std::invalid_argument("l1: length mismatch");
  double s = 0.0;
  for_union(d1, d2, [&](double a, double b) { s += std::abs(a - b); });
  return s;
}

double l2_distance(const Distribution& d1, const Distribution& d2) {
  if (d1.n != d2.n) throw std::invalid_argument("l2: length mismatch");
  double s = 0.0;
  for_union(d1, d2, [&](double a, double b) { s += (a - b) * (a - b); });
  return std::sqrt(s);
}

std::vector<double> hamming_histogram(const Distribution& d) {
  std::vector<double> h(d.n + 1, 0.0);
  for (auto& [m, v] : d.entries) h[weight(m)] += v;
  return h;
}

std::vector<mask_t> xor_sumset(std::span<const mask_t> a, int terms) {
  if (terms < 1) throw std::invalid_argument("xor_sumset: terms must be >= 1");
  std::vector<mask_t> cur(a.begin(), a.end());
  std::sort(cur.begin(), cur.end());
  cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
  std::vector<mask_t> base = cur;
  for (int t = 1; t < terms; ++t) {
    std::vector<mask_t> next;
    next.reserve(cur.size() * base.size());
    for (mask_t x : cur)
      for (mask_t y : base) next.push_back(x ^ y);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    cur = std::move(next);
  }
  return cur;
}

static double mass_on(const Distribution& d, std::span<const mask_t> sorted) {
  double s = 0.0;
  for (auto& [m, v] : d.entries)
    if (std::binary_search(sorted.begin(), sorted.end(), m)) s += v;
  return s;
}

SupportPropagation support_propagation_check(const Distribution& p,
                                             std::span<const mask_t> a) {
  if (!std::count(a.begin(), a.end(), mask_t{0}))
    throw std::invalid_argument("support_propagation_check: 0 must be in A");
  std::vector<mask_t> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  double eps = 1.0 - mass_on(p, sorted);
  std::vector<mask_t> sumset = xor_sumset(a, 2);
  double mass = mass_on(convolve(p, p), sumset);
  return {eps, mass, mass >= 1.0 - 2.0 * eps - 1e-12};
}

PowerSupportPropagation power_support_check(const Distribution& mu,
                                            std::span<const mask_t> a,
                                            int power_j) {
  if (!std::count(a.begin(), a.end(), mask_t{0}))
    throw std::invalid_argument("power_support_check: 0 must be in A");
  std::vector<mask_t> sorted(a.begin(), a.end());
  std::sort(sorted.begin(), sorted.end());
  double eps = 1.0 - mass_on(mu, sorted);
  std::vector<mask_t> sumset = xor_sumset(a, power_j + 1);
  double mass = mass_on(convolution_power_exact(mu, power_j), sumset);
  return {eps, mass, mass >= 1.0 - (power_j + 1) * eps - 1e-12};
}

long long sample_size_bound(long long support_size, double epsilon,
                            double delta_f, Norm norm, int power_j) {
  if (epsilon <= 0.0 || epsilon >= 1.0 || delta_f <= 0.0 || delta_f >= 1.0)
    throw std::invalid_argument("sample_size_bound: need eps, delta_f in (0,1)");
  if (support_size < 1 || power_j < 0)
    throw std::invalid_argument("sample_size_bound: bad support or power");
  double base = std::log(1.0 / delta_f) / (epsilon * epsilon);
  if (norm == Norm::l1)
    base *= std::pow(static_cast<double>(support_size), power_j + 1);
  return static_cast<long long>(std::ceil(base));
}

}  // namespace hgnoise

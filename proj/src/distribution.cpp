#include "hgnoise/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hgnoise {

static void check_n(int n) {
  if (n < 0 || n > kMaxQubits)
    throw std::invalid_argument("Distribution: n out of range");
}

Distribution Distribution::point_mass(int n, mask_t at) {
  check_n(n);
  return Distribution{n, Kind::prob, {{at, 1.0}}};
}

Distribution Distribution::from_entries(
    int n, Kind kind, std::vector<std::pair<mask_t, double>> e) {
  check_n(n);
  std::sort(e.begin(), e.end(),
            [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<std::pair<mask_t, double>> merged;
  merged.reserve(e.size());
  for (auto& [m, v] : e) {
    if (m & ~full_mask(n))
      throw std::invalid_argument("Distribution: mask exceeds n bits");
    if (!merged.empty() && merged.back().first == m)
      merged.back().second += v;
    else
      merged.emplace_back(m, v);
  }
  std::erase_if(merged, [](auto& kv) { return kv.second == 0.0; });
  return Distribution{n, kind, std::move(merged)};
}

Distribution Distribution::from_dense(int n, std::span<const double> dense,
                                      Kind kind, double drop_below) {
  check_n(n);
  if (dense.size() != (std::size_t{1} << n))
    throw std::invalid_argument("Distribution: dense size is not 2^n");
  std::vector<std::pair<mask_t, double>> e;
  for (std::size_t m = 0; m < dense.size(); ++m)
    if (std::abs(dense[m]) > drop_below)
      e.emplace_back(static_cast<mask_t>(m), dense[m]);
  return Distribution{n, kind, std::move(e)};
}

std::vector<double> Distribution::to_dense() const {
  if (n > 26) throw std::invalid_argument("Distribution: dense cap is n = 26");
  std::vector<double> d(std::size_t{1} << n, 0.0);
  for (auto& [m, v] : entries) d[m] = v;
  return d;
}

double Distribution::value(mask_t m) const {
  auto it = std::lower_bound(
      entries.begin(), entries.end(), m,
      [](const auto& kv, mask_t key) { return kv.first < key; });
  return (it != entries.end() && it->first == m) ? it->second : 0.0;
}

double Distribution::sum() const {
  double s = 0.0;
  for (auto& [m, v] : entries) s += v;
  return s;
}

double Distribution::sum_abs() const {
  double s = 0.0;
  for (auto& [m, v] : entries) s += std::abs(v);
  return s;
}

double Distribution::min_value() const {
  double mn = entries.empty() ? 0.0 : entries.front().second;
  for (auto& [m, v] : entries) mn = std::min(mn, v);
  return mn;
}

bool Distribution::is_probability(double tol) const {
  return min_value() >= -tol && std::abs(sum() - 1.0) <= tol;
}

Distribution Distribution::normalized() const {
  double total = sum();
  if (total <= 0.0)
    throw std::runtime_error("Distribution: cannot normalize, sum <= 0");
  Distribution out = *this;
  for (auto& [m, v] : out.entries) v /= total;
  return out;
}

void Distribution::validate(double tol) const {
  if (std::abs(sum() - 1.0) > tol)
    throw std::runtime_error("Distribution: entries do not sum to 1");
  if (kind == Kind::prob && min_value() < -tol)
    throw std::runtime_error("Distribution: negative probability entry");
}

}  // namespace hgnoise

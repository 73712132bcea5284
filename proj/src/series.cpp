#include "hgnoise/series.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace hgnoise {

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

std::string to_fraction_string(const BigRat& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

namespace {

using Poly = std::vector<BigRat>;  // index j holds the coefficient of t^j

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, BigRat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

void poly_add_into(Poly& a, const Poly& b) {
  if (b.size() > a.size()) a.resize(b.size(), BigRat(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

void poly_trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Numerator of d(w,m): sum_l sum_k C(l,2k+1) C(k+1,m).
BigInt d_numerator(int w, int m) {
  BigInt num = 0;
  for (int l = 2 * (m / 2); l <= w - 1; ++l)
    for (int k = m - 1; k <= l / 2; ++k)
      num += binomial(l, 2 * k + 1) * binomial(k + 1, m);
  return num;
}

BigInt series_denominator(int w) {
  BigInt d0 = 1;
  for (int l = 0; l <= w - 1; ++l)
    for (int k = 0; k <= l / 2; ++k) d0 += binomial(l, 2 * k + 1);
  return d0;
}

void check_w(int w) {
  if (w < 2 || w > 100)
    throw std::invalid_argument("series order w must be in [2, 100]");
}

}  // namespace

DTable d_table(int w) {
  check_w(w);
  BigInt d0 = series_denominator(w);
  DTable out;
  out.d.reserve(w - 1);
  for (int m = 1; m <= w - 1; ++m)
    out.d.emplace_back(BigRat(d_numerator(w, m), d0));
  for (int m = 1; m <= w - 1; ++m) {
    double v = std::pow(to_double(out.d[m - 1]), 1.0 / m);
    out.d_max = std::max(out.d_max, v);
  }
  return out;
}

double CoeffTable::eta() const {
  double e = 0.0;
  for (double c : coeffs_f) e = std::max(e, c * c);
  return e;
}

CoeffTable series_coefficients(int w, int s) {
  check_w(w);
  if (s < 0 || s > 100)
    throw std::invalid_argument("series order s must be in [0, 100]");

  BigRat d0(series_denominator(w));

  // operand: (sum_l sum_k C(l,2k) t^k) / D0, where t^k stands for the k-th
  // convolution power of mu
  Poly operand;
  for (int l = 0; l <= w - 1; ++l)
    for (int k = 0; 2 * k <= l; ++k) {
      if (operand.size() <= static_cast<std::size_t>(k))
        operand.resize(k + 1, BigRat(0));
      operand[k] += BigRat(binomial(l, 2 * k)) / d0;
    }

  // inverse operator expanded as a geometric series in
  // -M(t) = sum_m (-1)^{m+1} d(w,m) (1-t)^m, truncated at w+s terms
  DTable dt = d_table(w);
  Poly neg_m{BigRat(0)};
  Poly one_minus_t_pow{BigRat(1)};
  const Poly one_minus_t{BigRat(1), BigRat(-1)};
  for (int m = 1; m <= w - 1; ++m) {
    one_minus_t_pow = poly_mul(one_minus_t_pow, one_minus_t);
    BigRat c = dt.d[m - 1];
    if (m % 2 == 0) c = -c;
    Poly term = one_minus_t_pow;
    for (auto& x : term) x *= c;
    poly_add_into(neg_m, term);
  }
  poly_trim(neg_m);

  Poly geom{BigRat(1)};
  Poly neg_m_pow{BigRat(1)};
  for (int i = 1; i <= w + s - 1; ++i) {
    neg_m_pow = poly_mul(neg_m_pow, neg_m);
    poly_add_into(geom, neg_m_pow);
  }

  Poly coeffs = poly_mul(geom, operand);
  poly_trim(coeffs);

  CoeffTable table;
  table.w = w;
  table.s = s;
  table.coeffs = std::move(coeffs);
  table.coeffs_f.reserve(table.coeffs.size());
  for (auto& c : table.coeffs) table.coeffs_f.push_back(to_double(c));
  table.d_max = dt.d_max;
  return table;
}

double bias_bound(int w, int s, double delta) {
  check_w(w);
  if (delta < 0.0) throw std::invalid_argument("bias_bound: delta < 0");
  if (delta >= 1.0 / (3.0 * w))
    throw std::domain_error("bias_bound: requires delta < 1/(3w)");
  return std::pow(1.5 * w * delta, w + s) + std::pow(2.0 * delta, w);
}

Distribution decode_series(std::span<const Distribution> powers,
                           const CoeffTable& table) {
  if (powers.size() < table.coeffs.size())
    throw std::invalid_argument("decode_series: missing convolution powers");
  int n = powers.empty() ? 0 : powers[0].n;
  std::vector<std::pair<mask_t, double>> acc;
  for (std::size_t j = 0; j < table.coeffs.size(); ++j) {
    if (powers[j].n != n)
      throw std::invalid_argument("decode_series: power size mismatch");
    if (std::abs(powers[j].sum() - 1.0) > 1e-6)
      throw std::invalid_argument("decode_series: power does not sum to 1");
    double c = table.coeffs_f[j];
    for (auto& [m, v] : powers[j].entries) acc.emplace_back(m, c * v);
  }
  return Distribution::from_entries(n, Distribution::Kind::quasi,
                                    std::move(acc));
}

Distribution decode_series(const SampleBatch& batch, const CoeffTable& table) {
  if (batch.max_power + 1 < table.term_count())
    throw std::invalid_argument("decode_series: batch lacks required powers");
  std::vector<Distribution> powers;
  powers.reserve(table.term_count());
  for (int j = 0; j < table.term_count(); ++j)
    powers.push_back(batch.empirical(j));
  return decode_series(powers, table);
}

}  // namespace hgnoise

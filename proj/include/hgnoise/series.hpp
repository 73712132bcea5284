#pragma once

#include <span>
#include <vector>

#include "hgnoise/distribution.hpp"
#include "hgnoise/rational.hpp"
#include "hgnoise/sampler.hpp"

namespace hgnoise {

// Coefficients of the truncated convolution-series inverse of mu = p * p:
// p ~ sum_j coeffs[j] mu^{*j}, derived by exact rational polynomial algebra
// at truncation order (w, s). The coefficients always sum to 1, so the
// decoded vector is a quasi-probability.
struct CoeffTable {
  int w = 0;
  int s = 0;
  std::vector<BigRat> coeffs;
  std::vector<double> coeffs_f;  // float mirror of coeffs
  double d_max = 0.0;            // max_m d(w,m)^{1/m}

  int term_count() const { return static_cast<int>(coeffs.size()); }
  double eta() const;  // max_j coeffs[j]^2
};

// Inner-operator weights d(w,m), m = 1..w-1, and d_max = max d(w,m)^{1/m}.
// d(w,1) pins the series' convergence radius and grows like w/4.
struct DTable {
  std::vector<BigRat> d;
  double d_max = 0.0;
};

DTable d_table(int w);

// Valid for 2 <= w <= 100, s >= 0; the expansion is exact rational so the
// only cost of large orders is time. Term count obeys
// a(w,s) <= floor((w-1)/2) + (w-1)(w+s-1) + 1 terms (degree bound).
CoeffTable series_coefficients(int w, int s);

// Truncation bias magnitude (3 w delta / 2)^(w+s) + (2 delta)^w with unit
// constants; requires delta < 1/(3w).
double bias_bound(int w, int s, double delta);

// p_approx = sum_j c_j powers[j]. Needs powers[0..term_count-1], each
// summing to 1; the result sums to 1 with negativity permitted.
Distribution decode_series(std::span<const Distribution> powers,
                           const CoeffTable& table);
Distribution decode_series(const SampleBatch& batch, const CoeffTable& table);

}  // namespace hgnoise

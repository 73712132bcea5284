#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hgnoise/distribution.hpp"

namespace hgnoise {

// XOR-convolution (d1*d2)_u = sum_a d1_a d2_{a+u}. Small supports multiply
// entry pairs directly; otherwise goes through the Walsh transform
// (transform, pointwise multiply, inverse).
Distribution convolve(const Distribution& d1, const Distribution& d2);

// (j+1)-fold self convolution; index follows the convention power 0 = mu
// itself, so power j means j+1 factors.
Distribution convolution_power_exact(const Distribution& mu, int j);

double l1_distance(const Distribution& d1, const Distribution& d2);
double l2_distance(const Distribution& d1, const Distribution& d2);

// Total value per Hamming weight of the mask, indices 0..n.
std::vector<double> hamming_histogram(const Distribution& d);

// XOR sumset {a1 + ... + a_terms : a_i in A}.
std::vector<mask_t> xor_sumset(std::span<const mask_t> a, int terms);

struct SupportPropagation {
  double epsilon;          // p-mass missing from A
  double mass_on_sumset;   // (p*p)-mass on A+A
  bool holds;              // mass_on_sumset >= 1 - 2 epsilon
};

// Requires 0 in A; checks that mu = p*p keeps at least 1-2eps of its mass on
// the sumset A+A.
SupportPropagation support_propagation_check(const Distribution& p,
                                             std::span<const mask_t> a);

struct PowerSupportPropagation {
  double epsilon;         // mu-mass missing from A
  double mass_on_sumset;  // mu^{*j} mass on the (j+1)-fold sumset of A
  bool holds;             // mass_on_sumset >= 1 - (j+1) epsilon
};

PowerSupportPropagation power_support_check(const Distribution& mu,
                                            std::span<const mask_t> a,
                                            int power_j);

enum class Norm { l1, l2 };

// Order-of-magnitude sample-count guidance with unit leading constant:
// l1 needs |A|^{j+1} eps^-2 ln(1/delta_f); l2 drops the support factor.
long long sample_size_bound(long long support_size, double epsilon,
                            double delta_f, Norm norm, int power_j);

}  // namespace hgnoise

#pragma once

#include <vector>

#include "hgnoise/channel.hpp"
#include "hgnoise/distribution.hpp"
#include "hgnoise/hypergraph.hpp"

namespace hgnoise {

enum class TailorMethod { brute, local };

// |<psi| X^{bx} Z^{bz+a} |psi>|^2 for the hypergraph state psi, i.e. the
// squared Walsh coefficient of the derivative polynomial P(.|bx) at bz+a.
//
// brute sums over all 2^n assignments (n <= 20). local splits the variables
// into the nonlinear support of the derivative and the rest; outside that
// support the sum forces the matching linear coefficients, reducing the work
// to small per-component transforms.
double overlap_sq(const Hypergraph& g, mask_t bx, mask_t bz_plus_a,
                  TailorMethod method = TailorMethod::brute);

// Diagonal of the twirled noisy state in the {Z^a psi} basis:
// p_a = sum_b rate_b |<psi| X^{bx} Z^{bz} Z^a |psi>|^2.
// Sums to the channel's kept mass; sub-normalized channels stay
// sub-normalized here so truncation bias remains visible.
Distribution tailored_distribution(const Hypergraph& g, const PauliChannel& c,
                                   TailorMethod method);

// Smallest mask set containing 0 that carries mass >= 1 - epsilon, greedy by
// descending value with ties broken by ascending mask. Returned sorted by
// mask. If the total mass cannot reach the target every entry is returned.
std::vector<mask_t> dominant_support(const Distribution& p, double epsilon);

}  // namespace hgnoise

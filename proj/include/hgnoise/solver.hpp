#pragma once

#include <span>
#include <vector>

#include "hgnoise/distribution.hpp"

namespace hgnoise {

enum class NegativePolicy { clamp, error };

struct ExactSolution {
  Distribution p;   // quasi-probability summing to 1
  int clamped = 0;  // spectrum entries clamped to zero (clamp policy only)
};

// Inverts mu = p * p (XOR self-convolution) by transforming, taking the
// elementwise root and transforming back; the positive root keeps the output
// summing to 1. `order` is the generating-gate order: the root exponent is
// 1 / 2^(order-2), so order 3 is the square root. Dense work is capped at
// n = 24.
//
// Negative transform entries only arise from sampling noise (the spectrum is
// provably nonnegative when mu_0 >= 1/2); they are clamped to zero and
// counted, or rejected, per `neg`.
ExactSolution solve_exact(const Distribution& mu, int order = 3,
                          NegativePolicy neg = NegativePolicy::clamp);

// Same inversion restricted to span(basis) when supp(mu) lies inside it;
// runs on the 2^dim coordinate cube instead of 2^n. Throws if the basis is
// dependent or an entry of mu falls outside the span.
ExactSolution solve_exact_subspace(const Distribution& mu,
                                   std::span<const mask_t> basis,
                                   int order = 3,
                                   NegativePolicy neg = NegativePolicy::clamp);

}  // namespace hgnoise

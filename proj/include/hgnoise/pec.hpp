#pragma once

#include "hgnoise/distribution.hpp"

namespace hgnoise {

// Quasi-probability recovery plan for a Z-dephasing channel with rate
// vector p: apply Z^a with sign-weighted probability q_a / |q|_1. The l1
// norm squared sets the sampling overhead.
struct PecPlan {
  enum class Kind { exact, approx };
  Distribution q;
  double l1_norm = 1.0;
  Kind kind = Kind::exact;
};

// Exact spectral inverse q = 2^-n H (1 / Hp): satisfies sum(q) = 1 and
// q * p = delta_0 identically. Requires every transform entry of p to be
// nonzero (guaranteed for infidelity < 1/2).
PecPlan pec_exact(const Distribution& p);

// First-order inverse q'_0 = 2 - p_0, q'_a = -p_a; l1 norm 1 + 2 delta and
// residual convolution error of order delta^2.
PecPlan pec_approx(const Distribution& p);

// Sample count ceil(l1^2 eps^-2 ln(1/delta_f)), unit leading constant.
long long pec_overhead(const PecPlan& plan, double epsilon, double delta_f);

// First-order estimation bias M L eps plus the second-order
// M^2 C(L,2) eps^2 term, for L recovered states with plan norms <= M and
// per-state l1 error <= eps.
double bias_bound_downstream(int gate_count, double max_plan_l1,
                             double eps_per_state);

}  // namespace hgnoise

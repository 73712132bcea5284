#pragma once

#include <complex>
#include <span>
#include <vector>

#include "hgnoise/channel.hpp"
#include "hgnoise/distribution.hpp"
#include "hgnoise/hypergraph.hpp"

namespace hgnoise {

// Dense fixture (n <= 4) certifying the two algebraic facts the rest of the
// toolkit builds on: the X-frame twirl diagonalizes any noise in the
// {Z^a psi} basis without touching the diagonal, and the two-copy circuit's
// final measurement follows the XOR self-convolution of that diagonal.

using cplx = std::complex<double>;
using CMat = std::vector<cplx>;  // row-major 2^n x 2^n

struct TwirlReport {
  double max_offdiag = 0.0;      // |<psi_a| rho' |psi_b>|, a != b
  double max_diag_shift = 0.0;   // diagonal change through the twirl
  double max_vs_analytic = 0.0;  // diagonal vs tailored_distribution
  bool pass = false;
};

TwirlReport verify_twirl(const Hypergraph& g, const PauliChannel& channel);
// Arbitrary Kraus noise; `analytic` optionally supplies expected diagonals.
TwirlReport verify_twirl_kraus(const Hypergraph& g,
                               std::span<const CMat> kraus,
                               const Distribution* analytic = nullptr);

struct TwoCopyReport {
  double max_outcome_dev = 0.0;        // |Prob(u') - 2^-n|
  double max_l1_vs_convolution = 0.0;  // final law vs p*p, per u'
  double max_l1_across_outcomes = 0.0; // pairwise across u'
  bool phase_fix_clifford_only = false;  // every derivative has degree <= 2
  bool pass = false;
};

// Simulates both copies, the transversal CNOT layer, the intermediate Z
// measurement, and the degree-reduced phase layer. apply_phase_fix=false is
// the negative control: without the phase layer the final law deviates from
// p*p for generic inputs.
TwoCopyReport verify_two_copy(const Hypergraph& g, const Distribution& p,
                              bool apply_phase_fix = true);

// Single-qubit amplitude damping embedded in n qubits; a convenient
// non-Pauli test channel.
std::vector<CMat> kraus_amplitude_damping(int n, int qubit_1based,
                                          double gamma);

}  // namespace hgnoise

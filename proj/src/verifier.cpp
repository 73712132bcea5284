#include "hgnoise/verifier.hpp"

#include <cmath>
#include <stdexcept>

#include "hgnoise/convolution.hpp"
#include "hgnoise/kernels.hpp"
#include "hgnoise/tailoring.hpp"

namespace hgnoise {

namespace {

constexpr int kVerifyCap = 4;
constexpr double kOffdiagTol = 1e-10;
constexpr double kOutcomeTol = 1e-12;
constexpr double kLawTol = 1e-10;

void check_cap(int n) {
  if (n < 1 || n > kVerifyCap)
    throw std::invalid_argument("protocol verifier: n must be in [1, 4]");
}

std::size_t dim_of(int n) { return std::size_t{1} << n; }

// rho -> K rho K^dagger, accumulated into out
void accumulate_conjugation(const CMat& k, const CMat& rho, CMat& out,
                            std::size_t d) {
  CMat tmp(d * d, cplx{});
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t m = 0; m < d; ++m) {
      if (k[i * d + m] == cplx{}) continue;
      for (std::size_t j = 0; j < d; ++j)
        tmp[i * d + j] += k[i * d + m] * rho[m * d + j];
    }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      cplx acc{};
      for (std::size_t m = 0; m < d; ++m)
        acc += tmp[i * d + m] * std::conj(k[j * d + m]);
      out[i * d + j] += acc;
    }
}

CMat pauli_matrix(int n, mask_t bx, mask_t bz, double amp) {
  std::size_t d = dim_of(n);
  CMat m(d * d, cplx{});
  for (std::size_t x = 0; x < d; ++x) {
    double sign = dot(bz, static_cast<mask_t>(x)) ? -1.0 : 1.0;
    m[(x ^ bx) * d + x] = amp * sign;
  }
  return m;
}

struct TwirlChecks {
  double max_offdiag;
  double max_diag_shift;
  std::vector<double> diagonal;  // <psi_a| rho' |psi_a>
};

TwirlChecks run_twirl(const Hypergraph& g, std::span<const CMat> kraus) {
  check_cap(g.n);
  std::size_t d = dim_of(g.n);
  BoolPoly poly = poly_from_graph(g);

  std::vector<double> sign(d);
  for (std::size_t x = 0; x < d; ++x)
    sign[x] = eval(poly, static_cast<mask_t>(x)) ? -1.0 : 1.0;
  double amp = std::pow(2.0, -g.n / 2.0);

  // rho = sum_K K |psi><psi| K^dagger
  CMat psi_proj(d * d);
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      psi_proj[x * d + y] = amp * amp * sign[x] * sign[y];
  CMat rho(d * d, cplx{});
  for (const auto& k : kraus) {
    if (k.size() != d * d)
      throw std::invalid_argument("verify_twirl: Kraus dimension mismatch");
    accumulate_conjugation(k, psi_proj, rho, d);
  }

  auto basis_diag = [&](const CMat& m) {
    // <psi_a| m |psi_a> with psi_a(x) = amp * sign(x) * (-1)^{a.x}
    std::vector<double> out(d);
    for (std::size_t a = 0; a < d; ++a) {
      cplx acc{};
      for (std::size_t x = 0; x < d; ++x) {
        double sx = sign[x] * (dot(static_cast<mask_t>(a),
                                   static_cast<mask_t>(x))
                                   ? -1.0
                                   : 1.0);
        for (std::size_t y = 0; y < d; ++y) {
          double sy = sign[y] * (dot(static_cast<mask_t>(a),
                                     static_cast<mask_t>(y))
                                     ? -1.0
                                     : 1.0);
          acc += sx * sy * m[x * d + y];
        }
      }
      out[a] = acc.real() * amp * amp;
    }
    return out;
  };
  std::vector<double> diag_before = basis_diag(rho);

  // twirl: 2^-n sum_a Xpsi^a rho Xpsi^a, with Xpsi^a the signed permutation
  // |x> -> (-1)^{P(x)+P(x+a)} |x+a>
  CMat twirled(d * d, cplx{});
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t x = 0; x < d; ++x) {
      double sx = sign[x] * sign[x ^ a];
      for (std::size_t y = 0; y < d; ++y) {
        double sy = sign[y] * sign[y ^ a];
        twirled[x * d + y] += sx * sy * rho[(x ^ a) * d + (y ^ a)];
      }
    }
  }
  double norm = 1.0 / static_cast<double>(d);
  for (auto& v : twirled) v *= norm;

  // full change of basis B_ab = <psi_a| twirled |psi_b>
  double max_off = 0.0;
  std::vector<double> diag_after(d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) {
      cplx acc{};
      for (std::size_t x = 0; x < d; ++x) {
        double sx = sign[x] *
                    (dot(static_cast<mask_t>(a), static_cast<mask_t>(x)) ? -1.0
                                                                         : 1.0);
        for (std::size_t y = 0; y < d; ++y) {
          double sy = sign[y] * (dot(static_cast<mask_t>(b),
                                     static_cast<mask_t>(y))
                                     ? -1.0
                                     : 1.0);
          acc += sx * sy * twirled[x * d + y];
        }
      }
      acc *= amp * amp;
      if (a == b)
        diag_after[a] = acc.real();
      else
        max_off = std::max(max_off, std::abs(acc));
    }

  double max_shift = 0.0;
  for (std::size_t a = 0; a < d; ++a)
    max_shift = std::max(max_shift, std::abs(diag_after[a] - diag_before[a]));
  return {max_off, max_shift, std::move(diag_after)};
}

}  // namespace

TwirlReport verify_twirl(const Hypergraph& g, const PauliChannel& channel) {
  if (channel.n != g.n)
    throw std::invalid_argument("verify_twirl: channel/graph size mismatch");
  std::vector<CMat> kraus;
  kraus.reserve(channel.terms.size());
  for (auto& t : channel.terms)
    kraus.push_back(pauli_matrix(g.n, t.bx, t.bz, std::sqrt(t.rate)));
  Distribution analytic =
      tailored_distribution(g, channel, TailorMethod::brute);
  return verify_twirl_kraus(g, kraus, &analytic);
}

TwirlReport verify_twirl_kraus(const Hypergraph& g, std::span<const CMat> kraus,
                               const Distribution* analytic) {
  TwirlChecks checks = run_twirl(g, kraus);
  TwirlReport report;
  report.max_offdiag = checks.max_offdiag;
  report.max_diag_shift = checks.max_diag_shift;
  if (analytic) {
    for (std::size_t a = 0; a < checks.diagonal.size(); ++a)
      report.max_vs_analytic =
          std::max(report.max_vs_analytic,
                   std::abs(checks.diagonal[a] -
                            analytic->value(static_cast<mask_t>(a))));
  }
  report.pass = report.max_offdiag <= kOffdiagTol &&
                report.max_diag_shift <= kOffdiagTol &&
                report.max_vs_analytic <= kOffdiagTol;
  return report;
}

TwoCopyReport verify_two_copy(const Hypergraph& g, const Distribution& p,
                              bool apply_phase_fix) {
  check_cap(g.n);
  p.validate(1e-9);
  if (p.n != g.n)
    throw std::invalid_argument("verify_two_copy: p/graph size mismatch");
  int n = g.n;
  std::size_t d = dim_of(n);
  BoolPoly poly = poly_from_graph(g);

  std::vector<double> sign(d);
  for (std::size_t x = 0; x < d; ++x)
    sign[x] = eval(poly, static_cast<mask_t>(x)) ? -1.0 : 1.0;

  std::vector<BoolPoly> derivative(d, BoolPoly::zero(n));
  bool clifford_only = true;
  for (std::size_t u = 0; u < d; ++u) {
    derivative[u] = directional_derivative(poly, static_cast<mask_t>(u));
    if (derivative[u].degree() > 2) clifford_only = false;
  }

  // outcome_prob[u'] and final_law[u'][u], aggregated over the mixture
  std::vector<double> outcome_prob(d, 0.0);
  std::vector<std::vector<double>> final_law(d, std::vector<double>(d, 0.0));

  double inv_d = 1.0 / static_cast<double>(d);
  std::vector<double> sub(d);
  for (auto& [a, wa] : p.entries) {
    for (auto& [b, wb] : p.entries) {
      double wab = wa * wb;
      // After the CNOT layer the joint amplitude at |y, u'> is the input
      // amplitude at |y, u'+y>; projecting the second register on u' leaves
      // sub(y) = 2^-n (-1)^{P(y)+a.y+P(y+u')+b.(y+u')}.
      for (std::size_t u_prime = 0; u_prime < d; ++u_prime) {
        double norm_sq = 0.0;
        for (std::size_t y = 0; y < d; ++y) {
          mask_t yp = static_cast<mask_t>(y) ^ static_cast<mask_t>(u_prime);
          double amp = inv_d * sign[y] * sign[yp] *
                       (dot(a, static_cast<mask_t>(y)) ? -1.0 : 1.0) *
                       (dot(b, yp) ? -1.0 : 1.0);
          if (apply_phase_fix &&
              eval(derivative[u_prime], static_cast<mask_t>(y)))
            amp = -amp;
          sub[y] = amp;
          norm_sq += amp * amp;
        }
        outcome_prob[u_prime] += wab * norm_sq;
        // X-basis law: |2^{-n/2} sum_y (-1)^{u.y} sub(y)|^2
        fwht(sub);
        for (std::size_t u = 0; u < d; ++u)
          final_law[u_prime][u] += wab * sub[u] * sub[u] * inv_d;
      }
    }
  }

  TwoCopyReport report;
  report.phase_fix_clifford_only = clifford_only;
  for (std::size_t u_prime = 0; u_prime < d; ++u_prime)
    report.max_outcome_dev = std::max(
        report.max_outcome_dev, std::abs(outcome_prob[u_prime] - inv_d));

  // conditional laws need the 1/Prob(u') normalization
  Distribution expected = convolve(p, p);
  std::vector<double> expected_dense = expected.to_dense();
  for (std::size_t u_prime = 0; u_prime < d; ++u_prime) {
    double l1 = 0.0;
    for (std::size_t u = 0; u < d; ++u)
      l1 += std::abs(final_law[u_prime][u] / outcome_prob[u_prime] -
                     expected_dense[u]);
    report.max_l1_vs_convolution =
        std::max(report.max_l1_vs_convolution, l1);
  }
  for (std::size_t u1 = 0; u1 < d; ++u1)
    for (std::size_t u2 = u1 + 1; u2 < d; ++u2) {
      double l1 = 0.0;
      for (std::size_t u = 0; u < d; ++u)
        l1 += std::abs(final_law[u1][u] / outcome_prob[u1] -
                       final_law[u2][u] / outcome_prob[u2]);
      report.max_l1_across_outcomes =
          std::max(report.max_l1_across_outcomes, l1);
    }

  report.pass = report.max_outcome_dev <= kOutcomeTol &&
                report.max_l1_vs_convolution <= kLawTol &&
                report.max_l1_across_outcomes <= kLawTol &&
                (g.max_edge_order() > 3 || clifford_only);
  return report;
}

std::vector<CMat> kraus_amplitude_damping(int n, int qubit_1based,
                                          double gamma) {
  if (qubit_1based < 1 || qubit_1based > n)
    throw std::invalid_argument("kraus_amplitude_damping: qubit out of range");
  std::size_t d = dim_of(n);
  mask_t bit = qubit_bit(qubit_1based);
  CMat k0(d * d, cplx{});
  CMat k1(d * d, cplx{});
  for (std::size_t x = 0; x < d; ++x) {
    if (x & bit) {
      k0[x * d + x] = std::sqrt(1.0 - gamma);
      k1[(x ^ bit) * d + x] = std::sqrt(gamma);
    } else {
      k0[x * d + x] = 1.0;
    }
  }
  return {std::move(k0), std::move(k1)};
}

}  // namespace hgnoise

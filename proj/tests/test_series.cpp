#include <doctest.h>

#include <cmath>

#include "hgnoise/convolution.hpp"
#include "hgnoise/series.hpp"
#include "test_util.hpp"

using namespace hgnoise;

TEST_SUITE_BEGIN("series");

namespace {

BigRat rat(long long num, long long den) { return BigRat(num, den); }

std::vector<Distribution> exact_powers(const Distribution& mu, int count) {
  std::vector<Distribution> powers;
  for (int j = 0; j < count; ++j)
    powers.push_back(convolution_power_exact(mu, j));
  return powers;
}

}  // namespace

TEST_CASE("published low-order tables, exact rationals") {
  CoeffTable t20 = series_coefficients(2, 0);
  REQUIRE(t20.term_count() == 2);
  CHECK(t20.coeffs[0] == rat(3, 2));
  CHECK(t20.coeffs[1] == rat(-1, 2));

  CoeffTable t21 = series_coefficients(2, 1);
  REQUIRE(t21.term_count() == 3);
  CHECK(t21.coeffs[0] == rat(7, 4));
  CHECK(t21.coeffs[1] == rat(-1, 1));
  CHECK(t21.coeffs[2] == rat(1, 4));

  CoeffTable t30 = series_coefficients(3, 0);
  REQUIRE(t30.term_count() == 4);
  CHECK(t30.coeffs[0] == rat(111, 64));
  CHECK(t30.coeffs[1] == rat(-53, 64));
  CHECK(t30.coeffs[2] == rat(-3, 64));
  CHECK(t30.coeffs[3] == rat(9, 64));

  CoeffTable t31 = series_coefficients(3, 1);
  REQUIRE(t31.term_count() == 5);
  CHECK(t31.coeffs_f[0] == doctest::Approx(2.05078125).epsilon(1e-12));
  CHECK(t31.coeffs_f[1] == doctest::Approx(-1.671875).epsilon(1e-12));
  CHECK(t31.coeffs_f[2] == doctest::Approx(0.5859375).epsilon(1e-12));
  CHECK(t31.coeffs_f[3] == doctest::Approx(0.140625).epsilon(1e-12));
  CHECK(t31.coeffs_f[4] == doctest::Approx(-0.10546875).epsilon(1e-12));
}

TEST_CASE("coefficients sum to one, exactly") {
  for (int w = 2; w <= 9; ++w)
    for (int s = 0; s <= 5; ++s) {
      CoeffTable t = series_coefficients(w, s);
      BigRat sum = 0;
      for (auto& c : t.coeffs) sum += c;
      CHECK(sum == 1);
    }
}

TEST_CASE("term count respects the degree bound") {
  for (int w = 2; w <= 9; ++w)
    for (int s = 0; s <= 5; ++s) {
      CoeffTable t = series_coefficients(w, s);
      CHECK(t.term_count() <= (w - 1) / 2 + (w - 1) * (w + s - 1) + 1);
    }
}

TEST_CASE("inner operator weights") {
  DTable d2 = d_table(2);
  REQUIRE(d2.d.size() == 1);
  CHECK(d2.d[0] == rat(1, 2));
  CHECK(d2.d_max == doctest::Approx(0.5));

  DTable d3 = d_table(3);
  CHECK(d3.d[0] == rat(3, 4));

  // d_max(w) grows like w/4, with the maximum at m = 1
  for (int w = 4; w <= 12; ++w) {
    DTable dt = d_table(w);
    double ratio = dt.d_max / (w / 4.0);
    CHECK(ratio >= 0.8);
    CHECK(ratio <= 1.2);
    CHECK(dt.d_max == doctest::Approx(to_double(dt.d[0])));
  }
}

TEST_CASE("eta stays within the published ceiling") {
  // eta grows with s at fixed w and grows overall, but it is not monotone
  // step-by-step in w: eta(4,0) = (1695/1024)^2 < eta(3,0) = (111/64)^2.
  double eta_20 = series_coefficients(2, 0).eta();
  double eta_85 = 0.0;
  for (int w = 2; w <= 8; ++w) {
    double prev_s = 0.0;
    for (int s = 0; s <= 5; ++s) {
      CoeffTable t = series_coefficients(w, s);
      double eta = t.eta();
      CHECK(eta <= 5119.0);
      CHECK(eta >= prev_s);  // nondecreasing in s
      prev_s = eta;
      if (w == 8 && s == 5) eta_85 = eta;
    }
  }
  CHECK(eta_85 > eta_20);
  CHECK(series_coefficients(4, 0).eta() <
        series_coefficients(3, 0).eta());  // the w-direction counterexample

  // the (2,0) table tops out at (3/2)^2, not 2
  CHECK(eta_20 == doctest::Approx(2.25));
  for (int s = 0; s <= 9; ++s)
    CHECK(series_coefficients(2, s).eta() < 10.0);
}

TEST_CASE("bias bound") {
  CHECK(bias_bound(2, 0, 0.0) == 0.0);
  CHECK(bias_bound(2, 0, 0.05) ==
        doctest::Approx(std::pow(0.15, 2) + std::pow(0.1, 2)));
  // decreasing in w at fixed delta = 0.05 while 3w delta / 2 stays well
  // below 1; the leading term turns around as w approaches 1/(3 delta)
  double prev = bias_bound(2, 0, 0.05);
  for (int w = 3; w <= 5; ++w) {
    double cur = bias_bound(w, 0, 0.05);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(bias_bound(6, 0, 0.05) > bias_bound(5, 0, 0.05));
  CHECK_THROWS_AS(bias_bound(2, 0, 0.2), std::domain_error);
}

TEST_CASE("decode point mass") {
  Distribution mu = Distribution::point_mass(4, 0);
  for (auto [w, s] : {std::pair{2, 0}, {2, 1}, {3, 0}, {4, 0}}) {
    CoeffTable t = series_coefficients(w, s);
    Distribution p = decode_series(exact_powers(mu, t.term_count()), t);
    CHECK(p.value(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(l1_distance(p, mu) < 1e-12);
  }
}

TEST_CASE("two point bias at (2,0)") {
  // p = (0.95, 0.05): mu = (0.905, 0.095), mu*mu = (0.82805, 0.17195),
  // decode = (0.943475, 0.056525), l1 bias 0.01305
  Distribution p = Distribution::from_entries(
      1, Distribution::Kind::prob, {{0, 0.95}, {1, 0.05}});
  Distribution mu = convolve(p, p);
  CoeffTable t = series_coefficients(2, 0);
  Distribution approx = decode_series(exact_powers(mu, 2), t);
  CHECK(approx.value(0) == doctest::Approx(0.943475).epsilon(1e-12));
  CHECK(l1_distance(approx, p) == doctest::Approx(0.01305).epsilon(1e-10));
  CHECK(l1_distance(approx, p) <= 10.0 * bias_bound(2, 0, 0.05));
}

TEST_CASE("series bias shrinks with order and respects the bound") {
  for (int n : {4, 6, 8}) {
    Distribution p = testutil::random_dephasing(n, 0.05, 4000 + n);
    Distribution mu = convolve(p, p);
    double delta = p.infidelity();
    double prev_bias = -1.0;
    for (auto [w, s] : {std::pair{2, 0}, {3, 0}}) {
      CoeffTable t = series_coefficients(w, s);
      Distribution approx = decode_series(exact_powers(mu, t.term_count()), t);
      CHECK(approx.sum() == doctest::Approx(1.0).epsilon(1e-9));
      double bias = l1_distance(approx, p);
      CHECK(bias <= 10.0 * bias_bound(w, s, delta));
      if (prev_bias >= 0.0) CHECK(bias < prev_bias);
      prev_bias = bias;
    }
  }
}

TEST_CASE("decode validates its inputs") {
  Distribution mu = testutil::random_dephasing(4, 0.05, 5);
  CoeffTable t = series_coefficients(3, 0);
  std::vector<Distribution> too_few = exact_powers(mu, 2);
  CHECK_THROWS(decode_series(too_few, t));
  std::vector<Distribution> bad = exact_powers(mu, 4);
  bad[1] = Distribution::from_entries(4, Distribution::Kind::prob,
                                      {{0, 0.5}});
  CHECK_THROWS(decode_series(bad, t));
}

TEST_CASE("order domain") {
  CHECK_THROWS(series_coefficients(1, 0));
  CHECK_THROWS(series_coefficients(101, 0));
  CHECK_NOTHROW(series_coefficients(12, 2));
}

TEST_SUITE_END();

#include <doctest.h>

#include <unordered_map>
#include <vector>

#include "hgnoise/convolution.hpp"
#include "hgnoise/kernels.hpp"
#include "hgnoise/tailoring.hpp"
#include "test_util.hpp"

using namespace hgnoise;

TEST_SUITE_BEGIN("convolution");

namespace {

// quadratic-time oracle
Distribution convolve_oracle(const Distribution& a, const Distribution& b) {
  std::unordered_map<mask_t, double> acc;
  for (auto& [m1, v1] : a.entries)
    for (auto& [m2, v2] : b.entries) acc[m1 ^ m2] += v1 * v2;
  std::vector<std::pair<mask_t, double>> e(acc.begin(), acc.end());
  return Distribution::from_entries(a.n, Distribution::Kind::quasi,
                                    std::move(e));
}

}  // namespace

TEST_CASE("point mass is the identity element") {
  Distribution d = testutil::random_dephasing(5, 0.3, 21);
  Distribution out = convolve(Distribution::point_mass(5, 0), d);
  CHECK(l1_distance(out, d) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("two point distribution") {
  Distribution p = Distribution::from_entries(
      1, Distribution::Kind::prob, {{0, 0.9}, {1, 0.1}});
  Distribution mu = convolve(p, p);
  CHECK(mu.value(0) == doctest::Approx(0.82).epsilon(1e-15));
  CHECK(mu.value(1) == doctest::Approx(0.18).epsilon(1e-15));
}

TEST_CASE("sparse and dense paths agree") {
  for (int n : {4, 8, 10}) {
    Distribution a = testutil::random_dephasing(n, 0.4, 100 + n);
    Distribution b = testutil::random_dephasing(n, 0.2, 200 + n);
    // the dense path triggers on large supports; compare to the oracle too
    Distribution got = convolve(a, b);
    Distribution oracle = convolve_oracle(a, b);
    CHECK(l1_distance(got, oracle) < 1e-12);
  }
}

TEST_CASE("mass conservation and nonnegativity") {
  Distribution a = testutil::random_dephasing(6, 0.35, 7);
  Distribution b = testutil::random_dephasing(6, 0.15, 8);
  Distribution mu = convolve(a, b);
  CHECK(mu.kind == Distribution::Kind::prob);
  CHECK(mu.sum() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(mu.min_value() >= 0.0);
}

TEST_CASE("commutative and associative") {
  Distribution a = testutil::random_sparse_dephasing(10, 0.4, 6, 31);
  Distribution b = testutil::random_sparse_dephasing(10, 0.3, 5, 32);
  Distribution c = testutil::random_sparse_dephasing(10, 0.2, 4, 33);
  CHECK(l1_distance(convolve(a, b), convolve(b, a)) < 1e-14);
  CHECK(l1_distance(convolve(convolve(a, b), c),
                    convolve(a, convolve(b, c))) < 1e-12);
}

TEST_CASE("transform multiplicativity") {
  for (int n : {4, 8, 12}) {
    Distribution a = testutil::random_dephasing(n, 0.25, 300 + n);
    Distribution b = testutil::random_dephasing(n, 0.45, 400 + n);
    std::vector<double> fa = a.to_dense();
    std::vector<double> fb = b.to_dense();
    std::vector<double> fc = convolve(a, b).to_dense();
    fwht(fa);
    fwht(fb);
    fwht(fc);
    for (std::size_t i = 0; i < fa.size(); ++i)
      CHECK(fc[i] == doctest::Approx(fa[i] * fb[i]).epsilon(1e-12));
  }
}

TEST_CASE("convolution powers") {
  Distribution mu = Distribution::from_entries(
      1, Distribution::Kind::prob, {{0, 0.82}, {1, 0.18}});
  // power 0 is mu itself
  CHECK(l1_distance(convolution_power_exact(mu, 0), mu) == 0.0);
  Distribution sq = convolution_power_exact(mu, 1);
  CHECK(sq.value(0) == doctest::Approx(0.82 * 0.82 + 0.18 * 0.18));
  CHECK(sq.value(1) == doctest::Approx(2 * 0.82 * 0.18));
  // power(mu, 2) = convolve(power(mu, 1), mu)
  CHECK(l1_distance(convolution_power_exact(mu, 2),
                    convolve(sq, mu)) < 1e-15);

  Distribution big = testutil::random_dephasing(8, 0.3, 17);
  CHECK(l1_distance(
            convolution_power_exact(big, 3),
            convolve(convolve(convolve(big, big), big), big)) < 1e-12);
}

TEST_CASE("norms and histogram") {
  Distribution d0 = Distribution::point_mass(4, 0);
  Distribution d1 = Distribution::point_mass(4, 1);
  CHECK(l1_distance(d0, d0) == 0.0);
  CHECK(l1_distance(d0, d1) == 2.0);
  CHECK(l2_distance(d0, d1) == doctest::Approx(std::sqrt(2.0)));
  std::vector<double> h = hamming_histogram(d0);
  CHECK(h[0] == 1.0);
  for (std::size_t w = 1; w < h.size(); ++w) CHECK(h[w] == 0.0);
}

TEST_CASE("support propagation") {
  SUBCASE("full space") {
    Distribution p = testutil::random_dephasing(4, 0.5, 3);
    std::vector<mask_t> all;
    for (mask_t m = 0; m < 16; ++m) all.push_back(m);
    auto r = support_propagation_check(p, all);
    CHECK(r.epsilon == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r.mass_on_sumset == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(r.holds);
  }
  SUBCASE("single element") {
    Distribution p = testutil::random_dephasing(4, 0.3, 4);
    std::vector<mask_t> only_zero{0};
    auto r = support_propagation_check(p, only_zero);
    // mass on {0} is sum of squares >= (1-eps)^2 >= 1-2 eps
    double sq = 0.0;
    for (auto& [m, v] : p.entries) sq += v * v;
    CHECK(r.mass_on_sumset == doctest::Approx(sq).epsilon(1e-12));
    CHECK(r.holds);
  }
  SUBCASE("greedy dominant support") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Distribution p = testutil::random_sparse_dephasing(12, 0.4, 10, seed);
      auto a = dominant_support(p, 0.05);
      auto r = support_propagation_check(p, a);
      CHECK(r.holds);
    }
  }
  SUBCASE("powers") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      Distribution p = testutil::random_sparse_dephasing(10, 0.3, 6, 50 + seed);
      Distribution mu = convolve(p, p);
      auto a = dominant_support(mu, 0.08);
      for (int j = 1; j <= 3; ++j) {
        auto r = power_support_check(mu, a, j);
        CHECK(r.holds);
      }
    }
  }
}

TEST_CASE("sample size bound") {
  // halving epsilon quadruples the bound
  long long b1 = sample_size_bound(10, 0.1, 0.01, Norm::l2, 0);
  long long b2 = sample_size_bound(10, 0.05, 0.01, Norm::l2, 0);
  CHECK(b2 >= 4 * b1 - 4);
  CHECK(b2 <= 4 * b1 + 4);
  // l2 bound ignores the support size
  CHECK(sample_size_bound(10, 0.1, 0.01, Norm::l2, 2) ==
        sample_size_bound(1000000, 0.1, 0.01, Norm::l2, 2));
  // l1 bound scales as |A|^{j+1}
  long long l1_p0 = sample_size_bound(10, 0.1, 0.01, Norm::l1, 0);
  long long l1_p1 = sample_size_bound(10, 0.1, 0.01, Norm::l1, 1);
  CHECK(l1_p1 >= 10 * l1_p0 - 10);
  CHECK_THROWS(sample_size_bound(10, 0.0, 0.01, Norm::l1, 0));
}

TEST_SUITE_END();

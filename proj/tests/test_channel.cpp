#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "hgnoise/channel.hpp"
#include "hgnoise/hypergraph.hpp"

using namespace hgnoise;

TEST_SUITE_BEGIN("channel");

namespace {

Hypergraph line_graph(int n) {
  // covers all n vertices with size-2 edges
  std::vector<mask_t> edges;
  for (int v = 1; v < n; ++v)
    edges.push_back(qubit_bit(v) | qubit_bit(v + 1));
  return Hypergraph::from_edge_masks(n, edges);
}

}  // namespace

TEST_CASE("single qubit z preset") {
  Hypergraph g = Hypergraph::from_edge_masks(1, {0b1});
  PauliChannel c = preset_local(1, g, NoiseKind::z, 0.1);
  REQUIRE(c.terms.size() == 2);
  CHECK(c.terms[0].bx == 0);
  CHECK(c.terms[0].bz == 0);
  CHECK(c.terms[0].rate == doctest::Approx(0.9));
  CHECK(c.terms[1].bz == 1);
  CHECK(c.terms[1].rate == doctest::Approx(0.1));
  CHECK(c.is_normalized());
}

TEST_CASE("depolarizing preset splits tau across X, Y, Z") {
  Hypergraph g = Hypergraph::from_edge_masks(1, {0b1});
  PauliChannel c = preset_local(1, g, NoiseKind::depolarizing, 0.3);
  REQUIRE(c.terms.size() == 4);
  for (auto& t : c.terms) {
    if (t.bx == 0 && t.bz == 0)
      CHECK(t.rate == doctest::Approx(0.7));
    else
      CHECK(t.rate == doctest::Approx(0.1));
  }
}

TEST_CASE("xz preset is an independent pair of flips") {
  Hypergraph g = Hypergraph::from_edge_masks(1, {0b1});
  PauliChannel c = preset_local(1, g, NoiseKind::xz, 0.2);
  REQUIRE(c.terms.size() == 4);
  CHECK(c.is_normalized());
  for (auto& t : c.terms) {
    double expect = (t.bx ? 0.2 : 0.8) * (t.bz ? 0.2 : 0.8);
    CHECK(t.rate == doctest::Approx(expect));
  }
}

TEST_CASE("preset only touches covered vertices") {
  // vertex 4 is isolated
  Hypergraph g = Hypergraph::from_edge_masks(4, {0b0011, 0b0110});
  PauliChannel c = preset_local(4, g, NoiseKind::z, 0.25, 10);
  for (auto& t : c.terms) CHECK((t.bz & 0b1000) == 0);
  CHECK(c.is_normalized());
}

TEST_CASE("preset term count stays under the binomial budget") {
  Hypergraph g = line_graph(12);
  PauliChannel c = preset_local(12, g, NoiseKind::depolarizing, 0.01, 3);
  // <= sum_{w<3} C(12,w) 3^w
  CHECK(c.terms.size() <= 1 + 12 * 3 + 66 * 9);
  double dropped = 0.0;
  PauliChannel c2 = preset_local(12, g, NoiseKind::depolarizing, 0.01, 3,
                                 &dropped);
  CHECK(c2.total_rate() + dropped == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("compose") {
  PauliChannel id = PauliChannel::identity(3);
  Hypergraph g = line_graph(3);
  PauliChannel c = preset_local(3, g, NoiseKind::depolarizing, 0.1);
  PauliChannel composed = compose(id, c);
  REQUIRE(composed.terms.size() == c.terms.size());
  for (std::size_t i = 0; i < c.terms.size(); ++i) {
    CHECK(composed.terms[i].bx == c.terms[i].bx);
    CHECK(composed.terms[i].bz == c.terms[i].bz);
    CHECK(composed.terms[i].rate == doctest::Approx(c.terms[i].rate));
  }

  // two single-qubit Z channels combine by parity
  Hypergraph g1 = Hypergraph::from_edge_masks(1, {0b1});
  PauliChannel z1 = preset_local(1, g1, NoiseKind::z, 0.1);
  PauliChannel z2 = preset_local(1, g1, NoiseKind::z, 0.25);
  PauliChannel both = compose(z1, z2);
  double expect_z = 0.1 * 0.75 + 0.25 * 0.9;
  CHECK(both.terms[1].rate == doctest::Approx(expect_z));
  CHECK(both.is_normalized());

  // diagonal channels commute
  PauliChannel ab = compose(z1, z2);
  PauliChannel ba = compose(z2, z1);
  for (std::size_t i = 0; i < ab.terms.size(); ++i)
    CHECK(ab.terms[i].rate == doctest::Approx(ba.terms[i].rate));
}

TEST_CASE("truncate_by_weight") {
  Hypergraph g = Hypergraph::from_edge_masks(
      4, {0b0011, 0b0110, 0b1100, 0b1001});
  PauliChannel c = preset_local(4, g, NoiseKind::z, 0.1, 10);
  SUBCASE("huge cutoff keeps everything") {
    auto [kept, dropped] = truncate_by_weight(c, 99);
    CHECK(dropped == 0.0);
    CHECK(kept.terms.size() == c.terms.size());
  }
  SUBCASE("K = 1 keeps only the identity") {
    auto [kept, dropped] = truncate_by_weight(c, 1);
    REQUIRE(kept.terms.size() == 1);
    CHECK(kept.terms[0].error_weight() == 0);
    CHECK(kept.terms[0].rate + dropped == doctest::Approx(1.0));
  }
  SUBCASE("binomial enumeration, K = 2") {
    auto [kept, dropped] = truncate_by_weight(c, 2);
    double expect = 1.0 - (std::pow(0.9, 4) + 4 * 0.1 * std::pow(0.9, 3));
    CHECK(dropped == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("error weight counts Y once") {
  PauliTerm y{0b1, 0b1, 0.1};
  CHECK(y.error_weight() == 1);
  PauliTerm xz{0b01, 0b10, 0.1};
  CHECK(xz.error_weight() == 2);
}

TEST_CASE("tail bound") {
  CHECK(tail_bound(4, 0.01, 0) >= 1.0);
  CHECK(tail_bound(4, 0.0, 2) == 0.0);
  CHECK_THROWS_AS(tail_bound(4, 0.2, 2), std::domain_error);

  // dropped mass under the preset never exceeds the bound
  Hypergraph g = Hypergraph::from_edge_masks(
      4, {0b0011, 0b0110, 0b1100, 0b1001});
  for (int k : {1, 2, 3}) {
    PauliChannel c = preset_local(4, g, NoiseKind::depolarizing, 0.01, 10);
    auto [kept, dropped] = truncate_by_weight(c, k);
    CHECK(dropped <= tail_bound(4, 0.01, k));
  }
}

TEST_CASE("channel validation") {
  CHECK_THROWS(PauliChannel::from_terms(2, {{0, 0, 1.5}}));
  CHECK_THROWS(PauliChannel::from_terms(2, {{0b100, 0, 0.5}}));
  PauliChannel missing_identity =
      PauliChannel::from_terms(2, {{1, 0, 1.0}});
  CHECK_THROWS(missing_identity.validate());
  // duplicate (bx, bz) merge
  PauliChannel merged = PauliChannel::from_terms(
      2, {{0, 0, 0.5}, {0, 0, 0.3}, {1, 0, 0.2}});
  CHECK(merged.terms.size() == 2);
  CHECK(merged.identity_rate() == doctest::Approx(0.8));
}

TEST_SUITE_END();

#include <doctest.h>

#include <vector>

#include "hgnoise/hypergraph.hpp"
#include "hgnoise/sampler.hpp"
#include "test_util.hpp"

using namespace hgnoise;

TEST_SUITE_BEGIN("hypergraph");

TEST_CASE("poly_from_graph on presets") {
  Hypergraph k4 = build_k4();
  CHECK(k4.n == 4);
  CHECK(k4.edges.size() == 4);
  for (mask_t e : k4.edges) CHECK(weight(e) == 3);
  CHECK(k4.max_edge_order() == 3);

  BoolPoly p = poly_from_graph(k4);
  CHECK(p.monomials == k4.edges);
  CHECK(p.degree() == 3);

  BoolPoly none = poly_from_graph(Hypergraph::from_edge_masks(3, {}));
  CHECK(none.is_zero());

  BoolPoly single = poly_from_graph(Hypergraph::from_edge_masks(2, {0b11}));
  CHECK(single.monomials == std::vector<mask_t>{0b11});
}

TEST_CASE("edge duplicates cancel over GF(2)") {
  Hypergraph g = Hypergraph::from_edge_masks(3, {0b011, 0b011, 0b110});
  CHECK(g.edges == std::vector<mask_t>{0b110});
}

TEST_CASE("eval") {
  BoolPoly cube = BoolPoly::from_monomials(3, {0b111});
  CHECK(eval(cube, 0b111) == 1);
  CHECK(eval(cube, 0b011) == 0);

  BoolPoly k4 = poly_from_graph(build_k4());
  CHECK(eval(k4, 0) == 0);  // no constant term

  // x = (x1,x2,x3,x4) = (1,1,1,0): exactly the {1,2,3} monomial is active
  mask_t x = 0b0111;
  int expected = 0;
  for (mask_t m : k4.monomials)
    if ((m & x) == m) expected ^= 1;
  CHECK(expected == 1);
  CHECK(eval(k4, x) == 1);
}

TEST_CASE("directional derivative examples") {
  BoolPoly cube = BoolPoly::from_monomials(3, {0b111});
  CHECK(directional_derivative(cube, 0b001).monomials ==
        std::vector<mask_t>{0b110});
  CHECK(directional_derivative(cube, 0).is_zero());

  // complete 3-graph differentiated along vertex 1
  BoolPoly k4 = poly_from_graph(build_k4());
  BoolPoly d = directional_derivative(k4, 0b0001);
  CHECK(d.monomials == std::vector<mask_t>{0b0110, 0b1010, 0b1100});
}

TEST_CASE("higher derivative") {
  BoolPoly cube = BoolPoly::from_monomials(3, {0b111});
  std::vector<mask_t> shifts{0b001, 0b010};
  CHECK(higher_derivative(cube, shifts).monomials ==
        std::vector<mask_t>{0b100});

  std::vector<mask_t> with_zero{0b001, 0, 0b010};
  CHECK(higher_derivative(cube, with_zero).is_zero());

  // degree drops below 2 after two generic shifts of a degree-3 polynomial
  BoolPoly k4 = poly_from_graph(build_k4());
  std::vector<mask_t> generic{0b0011, 0b0101};
  CHECK(higher_derivative(k4, generic).degree() <= 1);
}

TEST_CASE("derivative identity eval(P, x+s) + eval(P, x) = eval(dP, x)") {
  // exhaustive on small random order-3 graphs
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Hypergraph g = testutil::random_order3_graph(6, 5, seed);
    BoolPoly p = poly_from_graph(g);
    for (mask_t s = 0; s < 64; ++s) {
      BoolPoly d = directional_derivative(p, s);
      CHECK(d.degree() <= (s == 0 ? 0 : 2));
      for (mask_t x = 0; x < 64; ++x)
        CHECK((eval(p, x ^ s) ^ eval(p, x)) == eval(d, x));
    }
  }
}

TEST_CASE("derivative identity, randomized at n = 16") {
  CounterRng rng{77};
  Hypergraph g = testutil::random_order3_graph(16, 24, 5);
  BoolPoly p = poly_from_graph(g);
  for (int trial = 0; trial < 50; ++trial) {
    mask_t s = static_cast<mask_t>(rng.at(2 * trial)) & full_mask(16);
    mask_t x = static_cast<mask_t>(rng.at(2 * trial + 1)) & full_mask(16);
    BoolPoly d = directional_derivative(p, s);
    CHECK((eval(p, x ^ s) ^ eval(p, x)) == eval(d, x));
  }
}

TEST_CASE("derivative is additive and vanishes on repeated shifts") {
  Hypergraph ga = testutil::random_order3_graph(8, 6, 11);
  Hypergraph gb = testutil::random_order3_graph(8, 6, 12);
  BoolPoly pa = poly_from_graph(ga);
  BoolPoly pb = poly_from_graph(gb);
  for (mask_t s : {mask_t{1}, mask_t{0b1010}, mask_t{0xff}}) {
    BoolPoly lhs = directional_derivative(add(pa, pb), s);
    BoolPoly rhs = add(directional_derivative(pa, s),
                       directional_derivative(pb, s));
    CHECK(lhs.monomials == rhs.monomials);

    std::vector<mask_t> twice{s, s};
    CHECK(higher_derivative(pa, twice).is_zero());
  }
}

TEST_CASE("union jack builder") {
  Hypergraph uj = build_union_jack(2, 3);
  CHECK(uj.n == 18);
  CHECK(uj.edges.size() == 24);
  for (mask_t e : uj.edges) CHECK(weight(e) == 3);
  // bounded degree regardless of extent: at most 8 triangles per vertex
  for (int v = 1; v <= uj.n; ++v) {
    CHECK(uj.vertex_degree(v) <= 8);
    CHECK(uj.vertex_neighbour_count(v) <= 8);
  }
  CHECK(uj.covered_vertices() == full_mask(18));

  Hypergraph tiny = build_union_jack(1, 1);
  CHECK(tiny.n == 5);
  CHECK(tiny.edges.size() == 4);
  for (mask_t e : tiny.edges) CHECK(weight(e) == 3);

  // interior vertex degree does not grow with the lattice
  Hypergraph wide = build_union_jack(2, 5);
  int max_deg = 0;
  for (int v = 1; v <= wide.n; ++v)
    max_deg = std::max(max_deg, wide.vertex_degree(v));
  CHECK(max_deg == 8);

  CHECK_THROWS(build_union_jack(4, 4));  // 41 vertices
  CHECK_THROWS(build_union_jack(0, 1));
}

TEST_CASE("vertex degree and neighborhood") {
  Hypergraph k4 = build_k4();
  CHECK(k4.vertex_degree(1) == 3);
  CHECK(k4.neighborhood(0b0001) == full_mask(4));

  Hypergraph empty = Hypergraph::from_edge_masks(4, {});
  CHECK(empty.vertex_degree(1) == 0);
  CHECK(empty.neighborhood(0b0001) == 0);
}

TEST_SUITE_END();

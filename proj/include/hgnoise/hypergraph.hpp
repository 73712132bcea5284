#pragma once

#include <span>
#include <string>
#include <vector>

#include "hgnoise/bitmask.hpp"

namespace hgnoise {

// Hypergraph on vertices [1..n]; every edge is a vertex subset stored as a
// mask. Edges live in GF(2): inserting an edge twice cancels it.
struct Hypergraph {
  int n = 0;
  std::vector<mask_t> edges;  // sorted, duplicate-free

  static Hypergraph from_edge_masks(int n, std::vector<mask_t> edge_masks);

  int max_edge_order() const;
  int vertex_degree(int vertex_1based) const;
  // Number of distinct vertices sharing an edge with v, v excluded.
  int vertex_neighbour_count(int vertex_1based) const;
  // Union of all edges meeting the vertex set `s`.
  mask_t neighborhood(mask_t s) const;
  // Vertices covered by at least one edge.
  mask_t covered_vertices() const;
};

// Multilinear polynomial over GF(2); each monomial is the mask of its
// variable set. The empty mask is the constant-1 monomial.
struct BoolPoly {
  int n = 0;
  std::vector<mask_t> monomials;  // sorted, duplicate-free

  static BoolPoly from_monomials(int n, std::vector<mask_t> monomials);
  static BoolPoly zero(int n) { return BoolPoly{n, {}}; }

  int degree() const;
  bool is_zero() const { return monomials.empty(); }
};

BoolPoly poly_from_graph(const Hypergraph& g);

// Parity of the monomials active at x.
int eval(const BoolPoly& p, mask_t x);

BoolPoly add(const BoolPoly& a, const BoolPoly& b);

// P(x|s) = P(x+s) + P(x). Drops the top-degree monomials it touches, so a
// degree-3 polynomial differentiates to degree <= 2 for any shift.
BoolPoly directional_derivative(const BoolPoly& p, mask_t shift);

BoolPoly higher_derivative(const BoolPoly& p, std::span<const mask_t> shifts);

// Complete 3-uniform hypergraph on 4 vertices.
Hypergraph build_k4();

// Union Jack tiling: rows x cols grid squares, a vertex on every grid corner
// plus one at the centre of each square, and four size-3 edges per square
// (centre + each side's corner pair).
//
// Numbering (1-based): corners row-major first, corner (r, c) with
// 0 <= r <= rows, 0 <= c <= cols is vertex r*(cols+1) + c + 1; the centre of
// square (r, c) with 0 <= r < rows, 0 <= c < cols follows as
// (rows+1)*(cols+1) + r*cols + c + 1. rows=2, cols=3 gives the 18-vertex
// instance.
Hypergraph build_union_jack(int rows, int cols);

}  // namespace hgnoise

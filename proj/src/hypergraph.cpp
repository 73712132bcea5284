#include "hgnoise/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

namespace hgnoise {

std::vector<mask_t> xor_canonicalize(std::vector<mask_t> items) {
  std::sort(items.begin(), items.end());
  std::vector<mask_t> out;
  out.reserve(items.size());
  for (std::size_t i = 0; i < items.size();) {
    std::size_t j = i;
    while (j < items.size() && items[j] == items[i]) ++j;
    if ((j - i) & 1) out.push_back(items[i]);
    i = j;
  }
  return out;
}

static void check_vertex_range(int n, std::span<const mask_t> masks,
                               const char* what) {
  if (n < 0 || n > kMaxQubits)
    throw std::invalid_argument(std::string(what) + ": n out of range");
  for (mask_t m : masks)
    if (m & ~full_mask(n))
      throw std::invalid_argument(std::string(what) +
                                  ": mask exceeds vertex count");
}

Hypergraph Hypergraph::from_edge_masks(int n, std::vector<mask_t> edge_masks) {
  check_vertex_range(n, edge_masks, "Hypergraph");
  for (mask_t m : edge_masks)
    if (m == 0) throw std::invalid_argument("Hypergraph: empty edge");
  return Hypergraph{n, xor_canonicalize(std::move(edge_masks))};
}

int Hypergraph::max_edge_order() const {
  int k = 0;
  for (mask_t e : edges) k = std::max(k, weight(e));
  return k;
}

int Hypergraph::vertex_degree(int vertex_1based) const {
  if (vertex_1based < 1 || vertex_1based > n)
    throw std::invalid_argument("vertex_degree: vertex out of range");
  mask_t bit = qubit_bit(vertex_1based);
  int d = 0;
  for (mask_t e : edges)
    if (e & bit) ++d;
  return d;
}

int Hypergraph::vertex_neighbour_count(int vertex_1based) const {
  mask_t bit = qubit_bit(vertex_1based);
  mask_t nb = 0;
  for (mask_t e : edges)
    if (e & bit) nb |= e;
  return weight(nb & ~bit);
}

mask_t Hypergraph::neighborhood(mask_t s) const {
  mask_t nb = 0;
  for (mask_t e : edges)
    if (e & s) nb |= e;
  return nb;
}

mask_t Hypergraph::covered_vertices() const {
  mask_t cov = 0;
  for (mask_t e : edges) cov |= e;
  return cov;
}

BoolPoly BoolPoly::from_monomials(int n, std::vector<mask_t> monomials) {
  check_vertex_range(n, monomials, "BoolPoly");
  return BoolPoly{n, xor_canonicalize(std::move(monomials))};
}

int BoolPoly::degree() const {
  int d = 0;
  for (mask_t m : monomials) d = std::max(d, weight(m));
  return d;
}

BoolPoly poly_from_graph(const Hypergraph& g) {
  return BoolPoly{g.n, g.edges};
}

int eval(const BoolPoly& p, mask_t x) {
  int parity = 0;
  for (mask_t m : p.monomials)
    if ((m & x) == m) parity ^= 1;
  return parity;
}

BoolPoly add(const BoolPoly& a, const BoolPoly& b) {
  if (a.n != b.n) throw std::invalid_argument("BoolPoly add: length mismatch");
  std::vector<mask_t> all = a.monomials;
  all.insert(all.end(), b.monomials.begin(), b.monomials.end());
  return BoolPoly{a.n, xor_canonicalize(std::move(all))};
}

BoolPoly directional_derivative(const BoolPoly& p, mask_t shift) {
  // Substituting x+s into a monomial m and adding m back leaves the sum of
  // m with every nonempty subset of m & s removed.
  std::vector<mask_t> out;
  for (mask_t m : p.monomials) {
    mask_t s = m & shift;
    if (!s) continue;  // untouched monomials cancel pairwise
    for (mask_t t = s; t; t = (t - 1) & s) out.push_back(m ^ t);
  }
  return BoolPoly{p.n, xor_canonicalize(std::move(out))};
}

BoolPoly higher_derivative(const BoolPoly& p, std::span<const mask_t> shifts) {
  if (shifts.empty())
    throw std::invalid_argument("higher_derivative: no shifts given");
  BoolPoly d = p;
  for (mask_t s : shifts) d = directional_derivative(d, s);
  return d;
}

Hypergraph build_k4() {
  return Hypergraph::from_edge_masks(4, {0b0111, 0b1011, 0b1101, 0b1110});
}

Hypergraph build_union_jack(int rows, int cols) {
  if (rows < 1 || cols < 1)
    throw std::invalid_argument("build_union_jack: rows, cols must be >= 1");
  long long n = static_cast<long long>(rows + 1) * (cols + 1) +
                static_cast<long long>(rows) * cols;
  if (n > kMaxQubits)
    throw std::invalid_argument("build_union_jack: vertex count exceeds 32");

  auto corner = [&](int r, int c) { return qubit_bit(r * (cols + 1) + c + 1); };
  int centre_base = (rows + 1) * (cols + 1);
  auto centre = [&](int r, int c) {
    return qubit_bit(centre_base + r * cols + c + 1);
  };

  std::vector<mask_t> edges;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      mask_t tl = corner(r, c), tr = corner(r, c + 1);
      mask_t bl = corner(r + 1, c), br = corner(r + 1, c + 1);
      mask_t m = centre(r, c);
      edges.push_back(tl | tr | m);
      edges.push_back(tr | br | m);
      edges.push_back(br | bl | m);
      edges.push_back(bl | tl | m);
    }
  }
  return Hypergraph::from_edge_masks(static_cast<int>(n), std::move(edges));
}

}  // namespace hgnoise

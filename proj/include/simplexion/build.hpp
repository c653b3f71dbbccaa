#pragma once

#include <cstdint>
#include <vector>

#include "simplexion/complex.hpp"
#include "simplexion/graph.hpp"
#include "simplexion/number.hpp"

namespace simplexion {

// Closure of the full simplex on vertices 0..n-1.
Complex complete(int n);
// Circular complex with n >= 3 vertices and n edges.
Complex cycle(int n);
// Path graph on n >= 1 vertices.
Complex path(int n);
// P_n: n isolated points. P_2 is the 0-sphere.
Complex points(int n);
// Join of d+1 copies of P_2; vertices 2i and 2i+1 are antipodal.
Complex cross_polytope(int d);
Complex icosahedron();
Graph icosahedron_graph();

// Complex of all cliques of a simple graph.
Complex whitney(const Graph& g);
// The Whitney complex with vertex positions mapped through `ids`.
Complex whitney(const Graph& g, const std::vector<int>& ids);

struct RandomModel {
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};
Graph erdos_renyi_graph(const RandomModel& m);
Complex erdos_renyi(const RandomModel& m);

// Polynomials in p with exact coefficients.
RationalPoly expected_dimension(int n);
RationalPoly expected_euler(int n);

struct ProductCell {
    Simplex left;
    Simplex right;
    int dim() const { return left.dim() + right.dim(); }
};

// Cells (x, y) of A x B ordered componentwise. Cell (i, j) of the canonical
// orders of A and B has index i * |B| + j.
struct ProductPoset {
    int left_size = 0;
    int right_size = 0;
    std::vector<ProductCell> cells;
    std::vector<std::vector<int>> up;
};
ProductPoset ring_product(const Complex& a, const Complex& b);
// Order complex of the product poset, a simplicial model of (A x B)_1.
Complex product_complex(const ProductPoset& p);

}  // namespace simplexion

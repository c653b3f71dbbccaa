#pragma once

#include <initializer_list>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "simplexion/graph.hpp"
#include "simplexion/number.hpp"
#include "simplexion/simplex.hpp"

namespace simplexion {

using FVector = std::vector<std::int64_t>;

// Finite downward-closed set of simplices, stored in canonical order
// (dimension, then lexicographic). The empty complex is allowed.
class Complex {
public:
    Complex() = default;

    // Closure of the given vertex sets; throws InvalidInput on an empty set.
    static Complex close(const std::vector<std::vector<int>>& sets);
    static Complex close(const std::vector<Simplex>& sets);
    static Complex close(std::initializer_list<std::initializer_list<int>> sets) {
        std::vector<std::vector<int>> v;
        for (const auto& s : sets) v.emplace_back(s);
        return close(v);
    }
    // Trusted constructor: `simplices` must already be downward closed.
    static Complex from_closed(std::vector<Simplex> simplices);

    const std::vector<Simplex>& simplices() const { return s_; }
    const Simplex& operator[](int i) const { return s_[i]; }
    int size() const { return static_cast<int>(s_.size()); }
    bool empty() const { return s_.empty(); }
    int dim() const { return s_.empty() ? -1 : s_.back().dim(); }

    // Canonical index of x, or -1.
    int index_of(const Simplex& x) const;
    bool contains(const Simplex& x) const { return index_of(x) >= 0; }
    // Throws NotFound when x is absent.
    int require(const Simplex& x) const;

    const std::vector<int>& vertices() const { return vertices_; }
    std::vector<Simplex> facets() const;

    friend bool operator==(const Complex& a, const Complex& b) { return a.s_ == b.s_; }

private:
    std::vector<Simplex> s_;
    std::unordered_map<Simplex, int, SimplexHash> index_;
    std::vector<int> vertices_;
};

// Codimension-one incidences by canonical index.
struct FaceLattice {
    std::vector<std::vector<int>> faces;    // faces[i][j] = index of s_i minus its j-th vertex
    std::vector<std::vector<int>> cofaces;  // simplices having s_i as a codimension-one face
};
FaceLattice face_lattice(const Complex& g);
// up[i] = indices of all simplices strictly containing s_i, increasing.
std::vector<std::vector<int>> up_sets(const Complex& g);

FVector f_vector(const Complex& g);
std::int64_t euler_characteristic(const Complex& g);
// [1, v_0, v_1, ...]: f_G(t) = 1 + sum v_k t^(k+1).
std::vector<std::int64_t> generating_function(const Complex& g);

// sigma[i] = chi of the star {y : s_i subset y} (sum of omega over the star).
std::vector<std::int64_t> star_chi(const Complex& g);
// Sum over ordered k-tuples with nonempty common intersection of the product
// of omega values.
BigInt wu_characteristic(const Complex& g, int k);

// Order complex of a poset on 0..n-1 given strict up-sets.
Complex order_complex(int n, const std::vector<std::vector<int>>& up);

// Unit sphere of x in the refinement graph; vertex ids are canonical indices.
Complex unit_sphere(const Complex& g, const Simplex& x);
std::vector<Simplex> star_up(const Complex& g, const Simplex& x);
Complex star_down(const Complex& g, const Simplex& x);

struct Relabeled {
    Complex complex;
    // Vertex id of H -> vertex id in the result.
    std::unordered_map<int, int> relabel;
};
// G + H = G u H u {x u y}; H is shifted above max vertex of G.
Relabeled join(const Complex& g, const Complex& h);
Relabeled disjoint_union(const Complex& g, const Complex& h);

// 1-skeleton on vertex positions 0..|V|-1 (position in vertices()).
Graph skeleton(const Complex& g);
// True when G is the Whitney complex of its 1-skeleton.
bool is_flag(const Complex& g);
// Refinement graph: vertices are canonical indices, edges are containment.
Graph refinement_graph(const Complex& g);

// Graph on which graph-level recursions run: the skeleton for flag
// complexes, otherwise the refinement graph.
struct Carrier {
    Graph graph;
    bool on_skeleton = true;
};
Carrier carrier(const Complex& g);

Rational inductive_dimension(const Complex& g);

std::string to_string(const Simplex& s);

}  // namespace simplexion

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "simplexion/complex.hpp"
#include "simplexion/graph.hpp"
#include "simplexion/number.hpp"

namespace simplexion {

// Values on the vertices of a graph (by position) or on the simplices of a
// complex (by canonical index).
using VertexFunction = std::vector<double>;

bool is_locally_injective(const Graph& g, const VertexFunction& f);

// Index 1 - chi(S^-(v)) where S^-(v) is the Whitney complex of the
// neighbours w of v with f(w) < f(v).
std::int64_t ph_index(const Graph& g, const VertexFunction& f, int v);
std::vector<std::int64_t> ph_indices(const Graph& g, const VertexFunction& f);
// Complex version: f lives on simplices, spheres are taken in the
// refinement graph.
std::int64_t ph_index(const Complex& g, const VertexFunction& f, int x);
std::vector<std::int64_t> ph_indices(const Complex& g, const VertexFunction& f);

struct CurvatureEstimate {
    double mean = 0.0;
    double stderr_ = 0.0;
    std::int64_t trials = 0;
};
// Mean index at v over uniformly random vertex orders.
CurvatureEstimate curvature_expectation(const Graph& g, int v, std::int64_t trials, std::uint64_t seed);

// 1 + sum_k (-1)^(k+1) v_k(S(v)) / (k+2).
Rational levitt_curvature(const Graph& g, int v);
std::vector<Rational> levitt_curvatures(const Graph& g);

// Weights (X_0, ..., X_m) applied to the f-vector.
using Valuation = std::vector<Rational>;
Rational valuation_eval(const Valuation& x, const Complex& g);
Complex complex_intersection(const Complex& a, const Complex& b);
Complex complex_union(const Complex& a, const Complex& b);
bool valuation_check(const Valuation& x, const Complex& a, const Complex& b);

// X_{k,d} = v_k + sum_{j=k}^{d-1} (-1)^(j+d) C(j+1, k+1) v_j, as a vector of
// length d + 1. It vanishes on (d-1)-spheres.
Valuation dehn_sommerville(int k, int d);
// Checks X_{k,d}(S(v)) = 0 for k < d at every vertex of a d-graph.
bool ds_curvature_check(const Graph& g, int d);
bool ds_curvature_check(const Complex& g);

// Sub-complex of the refinement generated by the simplices on which f
// (given on vertex ids) changes sign across c. Vertex ids of the result are
// canonical indices of g.
Complex level_surface(const Complex& g, const std::map<int, double>& f, double c);

// Recursive recognition on induced subgraphs of a fixed root graph, memoised
// by vertex subset. Exceeding the node budget throws ResourceError.
class Recognizer {
public:
    explicit Recognizer(const Graph& root, std::int64_t budget = 20'000'000);

    const Graph& root() const { return g_; }
    std::vector<int> all() const;
    std::vector<int> unit_sphere(const std::vector<int>& subset, int v) const;
    static std::vector<int> remove(const std::vector<int>& subset, int v);

    bool contractible(const std::vector<int>& subset);
    bool sphere(const std::vector<int>& subset, int d);
    bool d_graph(const std::vector<int>& subset, int d);
    bool ball(const std::vector<int>& subset, int d);
    // Removal order v_1, ..., v_{k-1} leaving a single vertex v_k, each
    // removed vertex having a contractible unit sphere at its time.
    std::optional<std::vector<int>> contraction_order(const std::vector<int>& subset);

private:
    void tick();

    const Graph& g_;
    std::int64_t budget_;
    std::int64_t nodes_ = 0;
    std::map<std::vector<int>, bool> contractible_;
    std::map<std::pair<std::vector<int>, int>, bool> sphere_;
    std::map<std::pair<std::vector<int>, int>, bool> ball_;
};

bool is_contractible(const Graph& g);
bool is_d_graph(const Graph& g, int d);
bool is_d_sphere(const Graph& g, int d);
bool is_d_ball(const Graph& g, int d);
// Complex versions run on the refinement graph.
bool is_contractible(const Complex& g);
bool is_d_graph(const Complex& g, int d);
bool is_d_sphere(const Complex& g, int d);
bool is_d_ball(const Complex& g, int d);

// Sub-complex generated by the simplices whose unit sphere in the
// refinement graph is a (d-1)-ball.
Complex boundary(const Complex& g, int d);

// Regular points have contractible S^-; critical points must have a sphere
// S^- and get index m = 1 + dim S^-.
struct MorseReport {
    bool is_morse = true;
    int first_failure = -1;
    std::vector<int> index;                  // m(v) at critical points, -1 at regular ones
    std::vector<std::int64_t> counts;        // c_k
    std::vector<std::int64_t> betti;         // of the Whitney complex
    bool weak_holds = false;
    bool strong_holds = false;
};
MorseReport morse_analysis(const Graph& g, const VertexFunction& f);
MorseReport morse_analysis(const Complex& g, const VertexFunction& f_on_simplices);

struct ReebResult {
    bool success = false;
    bool indeterminate = false;
    VertexFunction f;
    std::vector<int> critical;
};
// Critical points: v with S^-(v) not contractible.
std::vector<int> critical_points(const Graph& g, const VertexFunction& f);
ReebResult reeb_sphere_check(const Graph& g, int d);
// On the refinement graph; f is indexed by simplices.
ReebResult reeb_sphere_check(const Complex& g, int d);

}  // namespace simplexion

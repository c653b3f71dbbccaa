#pragma once

#include <cstdint>
#include <vector>

#include "simplexion/complex.hpp"
#include "simplexion/graph.hpp"
#include "simplexion/matrix.hpp"

namespace simplexion {

inline constexpr std::int64_t kDefaultRefineCap = 5'000'000;

// S(x, y) = Stirling2(y, x) * x! with 1-based x, y; order r gives an
// (r+1) x (r+1) upper triangular matrix.
struct StirlingOperator {
    int order = 0;
    ExactMatrix entries;
};
StirlingOperator stirling_operator(int order);
BigInt stirling2(int n, int k);
FVector stirling_apply(const StirlingOperator& s, const FVector& f);
// The eigenvector of S^T for eigenvalue 1 with first coordinate 1.
std::vector<Rational> euler_unique_vector(int r);

// |G_1| predicted from the f-vector.
std::int64_t predicted_refinement_size(const Complex& g);

// Order complex of the containment poset; vertex ids are canonical indices of
// G. Throws ResourceError when the predicted size exceeds cap.
Complex barycentric(const Complex& g, std::int64_t cap = kDefaultRefineCap);

// Vertices are canonical indices; u ~ v iff the simplices intersect (or,
// with dual = true, iff they are disjoint).
Graph connection_graph(const Complex& g, bool dual = false);

}  // namespace simplexion

#pragma once

#include <cstdint>
#include <vector>

#include "simplexion/build.hpp"
#include "simplexion/complex.hpp"
#include "simplexion/linalg.hpp"
#include "simplexion/numeric.hpp"

namespace simplexion {

struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<SparseRow> entries;  // entries[r] sorted by column

    ExactMatrix dense() const;
    SparseMatrix transpose() const;
};
SparseMatrix sparse_multiply(const SparseMatrix& a, const SparseMatrix& b);
bool is_zero(const SparseMatrix& m);
int rank(const SparseMatrix& m);

// Graded cochain complex. Degree-k simplices are the canonical indices
// offset[k] .. offset[k] + dims[k] - 1; d[k] has shape dims[k+1] x dims[k].
struct ChainComplexData {
    FVector dims;
    std::vector<int> offset;
    std::vector<SparseMatrix> d;
};
// Orientation by increasing vertex order; throws InternalError if dd != 0.
ChainComplexData exterior_derivative(const Complex& g);

struct CohomologyReport {
    std::vector<std::int64_t> betti;
    std::vector<std::int64_t> poincare_poly;  // coefficients b_k
    std::vector<std::int64_t> euler_poly;     // coefficients v_k
    std::int64_t alternating_sum() const;
};
CohomologyReport betti(const Complex& g);
CohomologyReport cohomology(const ChainComplexData& c);

// Full n x n exterior derivative, Dirac operator d + d^T and Hodge D^2.
ExactMatrix full_derivative(const Complex& g);
ExactMatrix dirac(const Complex& g);
ExactMatrix hodge_laplacian(const Complex& g);
// Block H_k = d_{k-1} d_{k-1}^T + d_k^T d_k.
std::vector<ExactMatrix> hodge_blocks(const ChainComplexData& c);

// Kernel dimensions of the Hodge blocks (eigenvalues below tol).
std::vector<std::int64_t> numeric_betti(const Complex& g, double tol = 1e-8);

struct McKeanSinger {
    std::int64_t chi = 0;
    std::vector<BigInt> exact;     // str(H^k), k = 0..6
    std::vector<double> times;
    std::vector<double> numeric;   // str(exp(-t H))
    bool exact_holds() const;
    bool numeric_holds(double tol) const;
};
McKeanSinger mckean_singer(const Complex& g, const std::vector<double>& times, int max_power = 6);

// T maps vertex v to t[v].
using VertexMap = std::vector<int>;
bool is_automorphism(const Complex& g, const VertexMap& t);
std::vector<VertexMap> automorphisms(const Complex& g);

struct LefschetzReport {
    std::vector<Rational> traces;  // trace of T* on H^k
    Rational cohomological;
    std::int64_t fixed_point_sum = 0;
    bool holds() const { return cohomological == fixed_point_sum; }
};
LefschetzReport lefschetz(const Complex& g, const VertexMap& t);

struct KuennethReport {
    CohomologyReport product, left, right;
    bool poincare_multiplicative = false;
    bool euler_multiplicative = false;
    double hodge_spectrum_error = 0;  // max deviation from the sum set
    bool connection_is_kronecker = false;
    double connection_spectrum_error = 0;  // max deviation from the product set
    bool passed(double tol = 1e-6) const;
};
KuennethReport kuenneth_check(const Complex& a, const Complex& b, int cap = 4096);

// Cohomology of the derivative on ordered intersecting pairs (x, y).
struct InteractionReport {
    CohomologyReport cohomology;
    bool dd_zero = false;
    BigInt wu;
};
InteractionReport interaction_cohomology(const Complex& g);

// K(v) = sum over v in x, x ~ y of omega(x) omega(y) / |x|.
std::vector<Rational> wu_curvature(const Complex& g);

struct AlexanderDual {
    Complex complex;
    bool contains_empty = false;  // false means the void complex
};
AlexanderDual alexander_dual(const Complex& g, const std::vector<int>& ground);
// Reduced Betti numbers b~_{-1}, b~_0, ... (index shifted by one).
std::vector<std::int64_t> reduced_betti(const Complex& g, bool contains_empty = true);
bool alexander_duality_check(const Complex& g, const std::vector<int>& ground);

// dF(A) and F(dA) for a k-form F and a (k+1)-chain A.
std::pair<BigInt, BigInt> stokes_pairing(const Complex& g, int k, const std::vector<BigInt>& form,
                                         const std::vector<BigInt>& chain);

}  // namespace simplexion

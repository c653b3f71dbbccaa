#pragma once

#include <string>
#include <vector>

#include "simplexion/complex.hpp"
#include "simplexion/linalg.hpp"
#include "simplexion/matrix.hpp"

namespace simplexion {

// Largest order for which inertia is computed from the characteristic
// polynomial; larger matrices use the leading-minor sign rule when possible.
inline constexpr int kBerkowitzLimit = 128;
// Exact dense operations refuse complexes larger than this by default.
inline constexpr int kDefaultExactCap = 3000;

ExactMatrix connection_matrix(const Complex& g);
ExactMatrix dual_connection_matrix(const Complex& g);

// Exact inverse of L. Throws InternalError if L is not unimodular.
ExactMatrix green_inverse(const Complex& g);

// L, its determinant and inverse from a single fraction-free elimination.
struct ConnectionData {
    ExactMatrix l;
    BigInt det;
    std::vector<BigInt> leading_minors;
    ExactMatrix green;
};
ConnectionData connection_data(const Complex& g, int cap = kDefaultExactCap);

// Sum of all entries of L^{-1}, via a single linear solve.
BigInt energy(const Complex& g);
BigInt energy(const ExactMatrix& green);

// omega(x) omega(y) chi(W+(x) n W+(y)).
BigInt green_star(const Complex& g, const Simplex& x, const Simplex& y);
ExactMatrix green_star_matrix(const Complex& g);

struct Inertia {
    int p = 0;
    int n = 0;
    int z = 0;
    std::string method;
};
// Exact inertia of a symmetric integer matrix.
Inertia inertia_exact(const ExactMatrix& m);
// Signature from leading principal minors (all must be nonzero).
Inertia inertia_from_minors(const std::vector<BigInt>& minors);

// sum_x omega(x) M(x, x)
BigInt supertrace(const Complex& g, const ExactMatrix& m);
struct SupertracePowers {
    BigInt inverse, identity, connection;
};
SupertracePowers supertrace_powers(const Complex& g, const ExactMatrix& green);

struct DualProductReport {
    BigInt det;               // det(-L Lbar)
    std::int64_t one_minus_chi = 0;
    bool det_holds = false;
    // Literal claim: char poly of -L Lbar equals (x-1)^(n-1) (x-(1-chi)).
    bool literal_eigen_claim = false;
    bool literal_checked = false;
    // -Lbar L^{-1} = I - 1 (g^T 1)^T has eigenvalue 1 with multiplicity
    // n-1 and eigenvalue 1-chi.
    bool inverse_form_claim = false;
    bool passed() const { return det_holds && inverse_form_claim; }
};
DualProductReport dual_product_check(const Complex& g, const ExactMatrix& green);

// Unsigned incidence: d(y, x) = 1 when x is a codimension-one face of y.
ExactMatrix unsigned_incidence(const Complex& g);
// L - L^{-1} == (|d| + |d|^T)^2 for one-dimensional complexes.
bool hydrogen_check(const Complex& g, const ExactMatrix& green);

struct TraceIdentity {
    BigInt trace;                 // tr(L - L^{-1})
    std::int64_t sphere_sum = 0;  // sum_x chi(S(x))
    std::int64_t derivative = 0;  // f'(0) - f'(-1) of the refinement's generating function
    bool holds() const { return trace == sphere_sum && trace == derivative; }
};
TraceIdentity trace_identity(const Complex& g, const ExactMatrix& green);

// Characteristic polynomials of L^2 and L^{-2}; equal for one-dimensional G.
struct SpectralSymmetry {
    std::vector<BigInt> l_squared, green_squared;
    bool holds() const { return l_squared == green_squared; }
};
SpectralSymmetry spectral_symmetry(const Complex& g, const ExactMatrix& green);

// Coefficients p_k of det(1 + z F^T G) via Berkowitz and via minor sums.
struct CauchyBinet {
    std::vector<BigInt> from_charpoly;
    std::vector<BigInt> from_minors;  // empty when the matrices are too large
    bool agree() const { return from_minors.empty() || from_charpoly == from_minors; }
};
CauchyBinet cauchy_binet_coeffs(const ExactMatrix& f, const ExactMatrix& gm);

}  // namespace simplexion

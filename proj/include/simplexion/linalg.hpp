#pragma once

#include <vector>

#include "simplexion/matrix.hpp"

namespace simplexion {

// Result of fraction-free elimination on a square matrix.
struct BareissResult {
    BigInt det;
    // Leading principal minors D_1..D_n; empty if a row exchange was needed.
    std::vector<BigInt> leading_minors;
};

BareissResult bareiss(const ExactMatrix& a);
BigInt det_exact(const ExactMatrix& a);

// Solves A Y = scale * B where scale = +-det(A); Y is then integral.
struct MultiSolution {
    BigInt scale;
    ExactMatrix y;
    BigInt det;
    // Leading principal minors of A; empty if a row exchange was needed.
    std::vector<BigInt> leading_minors;
};
MultiSolution solve_scaled(const ExactMatrix& a, const ExactMatrix& b);

// Exact inverse of a unimodular matrix; throws InternalError otherwise.
ExactMatrix unimodular_inverse(const ExactMatrix& a);

// Coefficients c_0..c_n with det(xI - A) = sum c_k x^(n-k), division free.
std::vector<BigInt> charpoly_berkowitz(const ExactMatrix& a);

int rank_exact(const ExactMatrix& a);

// Product computed in checked 64-bit arithmetic when it fits.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b);

// Reduced row echelon form in place; returns pivot columns.
std::vector<int> rref(RationalMatrix& m);
// Basis of {x : M x = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m);
// Rank of a sparse integer matrix given as rows of (column, value) pairs.
using SparseRow = std::vector<std::pair<int, std::int64_t>>;
int sparse_rank(const std::vector<SparseRow>& rows);

struct SignCount {
    int positive = 0;
    int negative = 0;
    int zero = 0;
};
// Root sign counts for a polynomial with only real roots, by Descartes' rule.
SignCount descartes_real_rooted(const std::vector<BigInt>& charpoly);

}  // namespace simplexion

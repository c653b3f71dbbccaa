#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "simplexion/complex.hpp"
#include "simplexion/graph.hpp"
#include "simplexion/numeric.hpp"

namespace simplexion {

using Complex128 = std::complex<double>;
using ComplexMatrix = Matrix<Complex128>;

enum class OperatorKind { connection, hodge, kirchhoff };
OperatorKind parse_operator(const std::string& name);
std::string to_string(OperatorKind k);

ExactMatrix kirchhoff(const Graph& g);
// Kirchhoff uses the 1-skeleton.
ExactMatrix operator_matrix(const Complex& g, OperatorKind k);

struct Spectrum {
    OperatorKind op = OperatorKind::connection;
    std::vector<double> values;  // ascending
};
Spectrum spectrum(const Complex& g, OperatorKind k);

// zeta(s) = sum over eigenvalues lambda of L^2 of lambda^(-s).
std::vector<Complex128> zeta(const Complex& g, const std::vector<Complex128>& s);
std::vector<Complex128> zeta_from_spectrum(const std::vector<double>& connection_eigenvalues,
                                           const std::vector<Complex128>& s);
// max |zeta(it) - zeta(-it)| over the given t.
double zeta_symmetry_error(const Complex& g, const std::vector<double>& t);

// L1 distance on [0,1) between the step function x -> values[floor(n x)]
// (values ascending) and 4 sin^2(pi x / 2).
double limit_distance(const std::vector<double>& values);
double circle_limit(double x);

struct LimitLevel {
    int level = 0;
    std::int64_t vertices = 0;
    std::vector<double> kirchhoff;         // ascending
    double distance = 0.0;                 // to the one-dimensional limit
    double max_gap = 0.0;                  // largest gap in the normalised spectrum
    double connection_min_abs = -1.0;      // -1 when not computed
};
struct LimitReport {
    int dimension = 0;
    std::vector<LimitLevel> levels;
    bool monotone() const;
    double final_distance() const { return levels.empty() ? 0.0 : levels.back().distance; }
};
// Levels 0..levels of repeated refinement. Throws ResourceError when a level
// would exceed vertex_cap vertices.
LimitReport barycentric_limit_experiment(const Complex& g, int levels, std::int64_t vertex_cap = 4000,
                                         int connection_cap = 1500);

struct TreeForest {
    BigInt tree;    // pseudo-determinant of K
    BigInt forest;  // det(K + I)
};
TreeForest tree_forest_numbers(const Graph& g);

// Solutions of u'' = -D^2 u and psi' = i D psi through the eigenbasis of the
// Dirac operator D = d + d^*.
class DiracEvolution {
public:
    explicit DiracEvolution(const Complex& g);

    int size() const { return static_cast<int>(values_.size()); }
    const std::vector<double>& eigenvalues() const { return values_; }
    const RealMatrix& dirac() const { return d_; }

    std::vector<double> wave(const std::vector<double>& u0, const std::vector<double>& v0, double t) const;
    std::vector<double> wave_velocity(const std::vector<double>& u0, const std::vector<double>& v0, double t) const;
    std::vector<Complex128> schrodinger(const std::vector<Complex128>& psi0, double t) const;

    // |(u(t+h) - 2u(t) + u(t-h)) / h^2 + D^2 u(t)|
    double wave_residual(const std::vector<double>& u0, const std::vector<double>& v0, double t, double h) const;
    // <u, D^2 u> + <u', u'>
    double energy(const std::vector<double>& u0, const std::vector<double>& v0, double t) const;

private:
    std::vector<double> coords(const std::vector<double>& x) const;
    std::vector<double> combine(const std::vector<double>& c) const;
    bool kernel(int k) const;

    RealMatrix d_;
    std::vector<double> values_;
    RealMatrix vectors_;
    double threshold_ = 0.0;
};

std::vector<double> wave_evolve(const Complex& g, const std::vector<double>& u0, const std::vector<double>& v0,
                                double t);
std::vector<Complex128> schrodinger_evolve(const Complex& g, const std::vector<Complex128>& psi0, double t);

struct LaxReport {
    double gamma = 0.0;
    double t_end = 0.0;
    double dt = 0.0;
    std::int64_t steps = 0;
    double eigen_drift = 0.0;   // max_k |lambda_k(t) - lambda_k(0)|
    double square_drift = 0.0;  // |D(t)^2 - D(0)^2| (Frobenius)
    ComplexMatrix final_d;
};
// D' = [B, D] with B = d - d^* + i gamma b, integrated by classical RK4.
// Throws NumericError when the eigenvalue drift exceeds drift_tolerance.
LaxReport lax_flow(const Complex& g, double gamma, double t_end, double dt = 1e-3, double drift_tolerance = 1e-6);
// Eigenvalues of a Hermitian matrix, ascending.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

}  // namespace simplexion

#include "simplexion/numeric.hpp"

#include <cmath>

#include <Eigen/Eigenvalues>

#include "simplexion/errors.hpp"

namespace simplexion {

RealMatrix to_real(const ExactMatrix& m) {
    RealMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = m(i, j).convert_to<double>();
    return r;
}

double frobenius_norm(const RealMatrix& m) {
    double s = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += m(i, j) * m(i, j);
    return std::sqrt(s);
}

EigenDecomposition eig_symmetric(const RealMatrix& m, bool want_vectors) {
    if (!m.square()) throw InvalidInput("eig_symmetric: matrix not square");
    const int n = m.rows();
    const double scale = std::max(frobenius_norm(m), 1.0);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (std::abs(m(i, j) - m(j, i)) > 1e-12 * scale) throw InvalidInput("eig_symmetric: matrix not symmetric");
            a(i, j) = m(i, j);
        }
    EigenDecomposition out;
    if (n == 0) return out;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, want_vectors ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericError("eig_symmetric: iteration did not converge");
    out.values.assign(es.eigenvalues().data(), es.eigenvalues().data() + n);
    if (want_vectors) {
        out.vectors = RealMatrix(n, n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) out.vectors(i, j) = es.eigenvectors()(i, j);
    }
    return out;
}

}  // namespace simplexion

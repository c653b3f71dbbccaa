#pragma once

#include <vector>

#include "simplexion/matrix.hpp"

namespace simplexion {

using RealMatrix = Matrix<double>;

RealMatrix to_real(const ExactMatrix& m);

struct EigenDecomposition {
    std::vector<double> values;  // ascending
    RealMatrix vectors;          // column k belongs to values[k]; empty unless requested
};

// Symmetric eigensolver. Throws InvalidInput when M is not symmetric within
// 1e-12 relative tolerance, NumericError when the iteration fails.
EigenDecomposition eig_symmetric(const RealMatrix& m, bool want_vectors = false);

double frobenius_norm(const RealMatrix& m);

}  // namespace simplexion

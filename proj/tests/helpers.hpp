#pragma once

#include <vector>

#include "oracles.hpp"
#include "simplexion/build.hpp"
#include "simplexion/complex.hpp"
#include "simplexion/matrix.hpp"
#include "simplexion/random.hpp"

namespace testkit {

inline std::vector<oracle::Set> sets(const simplexion::Complex& g) {
    std::vector<oracle::Set> out;
    for (const auto& s : g.simplices()) out.push_back(s.vertices());
    return out;
}

inline oracle::IntMat to_int(const simplexion::ExactMatrix& m) {
    oracle::IntMat out(m.rows(), std::vector<std::int64_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).convert_to<std::int64_t>();
    return out;
}

inline simplexion::Complex star3() { return simplexion::Complex::close({{0, 1}, {0, 2}, {0, 3}}); }

// Wheel with `rim` spokes: a disk.
inline simplexion::Complex wheel(int rim) {
    std::vector<std::vector<int>> f;
    for (int i = 0; i < rim; ++i) f.push_back({0, 1 + i, 1 + (i + 1) % rim});
    return simplexion::Complex::close(f);
}

// Small named complexes used across suites.
inline std::vector<simplexion::Complex> small_corpus() {
    using namespace simplexion;
    std::vector<Complex> out;
    for (int n = 1; n <= 4; ++n) out.push_back(complete(n));
    for (int n = 3; n <= 6; ++n) out.push_back(cycle(n));
    out.push_back(path(4));
    out.push_back(points(3));
    out.push_back(cross_polytope(1));
    out.push_back(cross_polytope(2));
    out.push_back(star3());
    out.push_back(wheel(5));
    out.push_back(Complex::close({{0, 1, 2}, {2, 3}, {3, 4, 5}, {6}}));
    return out;
}

inline std::vector<simplexion::Complex> random_corpus(int count, int max_n, std::uint64_t seed) {
    std::vector<simplexion::Complex> out;
    const double ps[] = {0.2, 0.5, 0.8};
    for (int i = 0; i < count; ++i) {
        const int n = 1 + i % max_n;
        out.push_back(simplexion::erdos_renyi({n, ps[i % 3], simplexion::substream_seed(seed, i)}));
    }
    return out;
}

}  // namespace testkit

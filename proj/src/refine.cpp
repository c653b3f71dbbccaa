#include "simplexion/refine.hpp"

#include "simplexion/errors.hpp"
#include "simplexion/linalg.hpp"

namespace simplexion {

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) return 0;
    if (k > n) return 0;
    // k! S(n,k) counts surjections of an n-set onto a k-set.
    BigInt surj = 0;
    for (int i = 0; i <= k; ++i) {
        BigInt t = binomial(k, i) * boost::multiprecision::pow(BigInt(k - i), static_cast<unsigned>(n));
        surj += (i % 2 == 0) ? t : BigInt(-t);
    }
    return surj / factorial(k);
}

StirlingOperator stirling_operator(int order) {
    if (order < 0) throw InvalidInput("stirling_operator: negative order");
    StirlingOperator s{order, ExactMatrix(order + 1, order + 1)};
    for (int x = 1; x <= order + 1; ++x)
        for (int y = x; y <= order + 1; ++y) s.entries(x - 1, y - 1) = stirling2(y, x) * factorial(x);
    return s;
}

FVector stirling_apply(const StirlingOperator& s, const FVector& f) {
    if (static_cast<int>(f.size()) > s.order + 1) throw InvalidInput("stirling_apply: f-vector longer than operator");
    FVector out(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) {
        BigInt acc = 0;
        for (std::size_t j = i; j < f.size(); ++j) acc += s.entries(static_cast<int>(i), static_cast<int>(j)) * f[j];
        out[i] = acc.convert_to<std::int64_t>();
    }
    return out;
}

std::vector<Rational> euler_unique_vector(int r) {
    StirlingOperator s = stirling_operator(r);
    RationalMatrix m(r + 1, r + 1);
    for (int i = 0; i <= r; ++i)
        for (int j = 0; j <= r; ++j) m(i, j) = Rational(s.entries(j, i)) - (i == j ? 1 : 0);
    auto basis = nullspace(m);
    if (basis.size() != 1) throw InternalError("euler_unique_vector: eigenspace is not one-dimensional");
    std::vector<Rational> v = basis.front();
    if (v[0] == 0) throw InternalError("euler_unique_vector: first coordinate vanishes");
    const Rational lead = v[0];
    for (auto& x : v) x /= lead;
    return v;
}

std::int64_t predicted_refinement_size(const Complex& g) {
    if (g.empty()) return 0;
    FVector f = f_vector(g);
    StirlingOperator s = stirling_operator(static_cast<int>(f.size()) - 1);
    BigInt total = 0;
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = i; j < f.size(); ++j) total += s.entries(static_cast<int>(i), static_cast<int>(j)) * f[j];
    if (total > INT64_MAX) return INT64_MAX;
    return total.convert_to<std::int64_t>();
}

Complex barycentric(const Complex& g, std::int64_t cap) {
    const std::int64_t predicted = predicted_refinement_size(g);
    if (predicted > cap)
        throw ResourceError("refinement would have " + std::to_string(predicted) + " simplices (cap " +
                            std::to_string(cap) + ")");
    return order_complex(g.size(), up_sets(g));
}

Graph connection_graph(const Complex& g, bool dual) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < g.size(); ++i)
        for (int j = i + 1; j < g.size(); ++j)
            if (intersects(g[i], g[j]) != dual) e.emplace_back(i, j);
    return Graph::from_edges(g.size(), e);
}

}  // namespace simplexion

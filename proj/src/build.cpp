#include "simplexion/build.hpp"

#include <numeric>

#include "simplexion/errors.hpp"
#include "simplexion/random.hpp"

namespace simplexion {

Complex complete(int n) {
    if (n < 1) throw InvalidInput("complete: n must be at least 1");
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Complex::close({v});
}

Complex cycle(int n) {
    if (n < 3) throw InvalidInput("cycle: n must be at least 3");
    std::vector<std::vector<int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return Complex::close(e);
}

Complex path(int n) {
    if (n < 1) throw InvalidInput("path: n must be at least 1");
    std::vector<std::vector<int>> e{{0}};
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Complex::close(e);
}

Complex points(int n) {
    if (n < 1) throw InvalidInput("points: n must be at least 1");
    std::vector<std::vector<int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i});
    return Complex::close(e);
}

Complex cross_polytope(int d) {
    if (d < 0) throw InvalidInput("cross_polytope: d must be non-negative");
    Complex g = points(2);
    for (int i = 0; i < d; ++i) g = join(g, points(2)).complex;
    return g;
}

Graph icosahedron_graph() {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= 5; ++i) {
        const int next = i % 5 + 1;
        e.emplace_back(0, i);
        e.emplace_back(i, next);
        e.emplace_back(i, i + 5);
        e.emplace_back(i, next + 5);
        e.emplace_back(i + 5, next + 5);
        e.emplace_back(i + 5, 11);
    }
    return Graph::from_edges(12, e);
}

Complex icosahedron() { return whitney(icosahedron_graph()); }

Complex whitney(const Graph& g, const std::vector<int>& ids) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    std::vector<Simplex> s;
    for_each_clique(g, all, [&](const std::vector<int>& c) {
        std::vector<int> v;
        v.reserve(c.size());
        for (int x : c) v.push_back(ids[x]);
        s.emplace_back(std::move(v));
    });
    return Complex::from_closed(std::move(s));
}

Complex whitney(const Graph& g) {
    std::vector<int> ids(g.n);
    std::iota(ids.begin(), ids.end(), 0);
    return whitney(g, ids);
}

Graph erdos_renyi_graph(const RandomModel& m) {
    if (m.n < 0) throw InvalidInput("erdos_renyi: n must be non-negative");
    if (!(m.p >= 0.0 && m.p <= 1.0)) throw InvalidInput("erdos_renyi: p must lie in [0, 1]");
    Rng rng(m.seed);
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < m.n; ++u)
        for (int v = u + 1; v < m.n; ++v)
            if (rng.bernoulli(m.p)) e.emplace_back(u, v);
    return Graph::from_edges(m.n, e);
}

Complex erdos_renyi(const RandomModel& m) { return whitney(erdos_renyi_graph(m)); }

namespace {

// C(n,k) p^k (1-p)^(n-k) as a polynomial in p.
RationalPoly bernstein(int n, int k) {
    RationalPoly r{Rational(binomial(n, k))};
    for (int i = 0; i < k; ++i) r = poly_mul(r, {Rational(0), Rational(1)});
    for (int i = 0; i < n - k; ++i) r = poly_mul(r, {Rational(1), Rational(-1)});
    return r;
}

}  // namespace

RationalPoly expected_dimension(int n) {
    if (n < 0) throw InvalidInput("expected_dimension: n must be non-negative");
    std::vector<RationalPoly> d{{Rational(-1)}};
    for (int m = 0; m < n; ++m) {
        RationalPoly next{Rational(1)};
        for (int k = 0; k <= m; ++k) next = poly_add(next, poly_mul(bernstein(m, k), d[k]));
        d.push_back(next);
    }
    return d[n];
}

RationalPoly expected_euler(int n) {
    if (n < 0) throw InvalidInput("expected_euler: n must be non-negative");
    RationalPoly e;
    for (int k = 1; k <= n; ++k) {
        const int power = k * (k - 1) / 2;
        RationalPoly term(power + 1, Rational(0));
        term[power] = Rational(binomial(n, k)) * ((k % 2 == 1) ? 1 : -1);
        e = poly_add(e, term);
    }
    return e;
}

ProductPoset ring_product(const Complex& a, const Complex& b) {
    ProductPoset p;
    p.left_size = a.size();
    p.right_size = b.size();
    const auto upa = up_sets(a), upb = up_sets(b);
    const int nb = b.size();
    p.cells.reserve(static_cast<std::size_t>(a.size()) * nb);
    p.up.resize(static_cast<std::size_t>(a.size()) * nb);
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < nb; ++j) {
            p.cells.push_back({a[i], b[j]});
            std::vector<int> ai{i}, bj{j};
            ai.insert(ai.end(), upa[i].begin(), upa[i].end());
            bj.insert(bj.end(), upb[j].begin(), upb[j].end());
            auto& u = p.up[i * nb + j];
            for (int x : ai)
                for (int y : bj)
                    if (x != i || y != j) u.push_back(x * nb + y);
        }
    return p;
}

Complex product_complex(const ProductPoset& p) { return order_complex(static_cast<int>(p.cells.size()), p.up); }

}  // namespace simplexion

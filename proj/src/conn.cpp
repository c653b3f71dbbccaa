#include "simplexion/conn.hpp"

#include <functional>

#include "simplexion/errors.hpp"
#include "simplexion/refine.hpp"

namespace simplexion {

ExactMatrix connection_matrix(const Complex& g) {
    const int n = g.size();
    ExactMatrix l(n, n);
    for (int i = 0; i < n; ++i) {
        l(i, i) = 1;
        for (int j = i + 1; j < n; ++j)
            if (intersects(g[i], g[j])) l(i, j) = l(j, i) = 1;
    }
    return l;
}

ExactMatrix dual_connection_matrix(const Complex& g) {
    const int n = g.size();
    ExactMatrix l(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!intersects(g[i], g[j])) l(i, j) = l(j, i) = 1;
    return l;
}

ExactMatrix green_inverse(const Complex& g) { return unimodular_inverse(connection_matrix(g)); }

ConnectionData connection_data(const Complex& g, int cap) {
    if (g.size() > cap)
        throw ResourceError("exact operations capped at " + std::to_string(cap) + " simplices (complex has " +
                            std::to_string(g.size()) + ")");
    ConnectionData d;
    d.l = connection_matrix(g);
    MultiSolution s = solve_scaled(d.l, ExactMatrix::identity(g.size()));
    d.det = s.det;
    d.leading_minors = std::move(s.leading_minors);
    if (s.scale == 1 || s.scale == -1) {
        d.green = std::move(s.y);
        if (s.scale == -1)
            for (int i = 0; i < d.green.rows(); ++i)
                for (int j = 0; j < d.green.cols(); ++j) d.green(i, j) = -d.green(i, j);
    }
    return d;
}

BigInt energy(const ExactMatrix& green) {
    BigInt s = 0;
    for (int i = 0; i < green.rows(); ++i)
        for (int j = 0; j < green.cols(); ++j) s += green(i, j);
    return s;
}

BigInt energy(const Complex& g) {
    ExactMatrix ones(g.size(), 1, BigInt(1));
    MultiSolution s = solve_scaled(connection_matrix(g), ones);
    BigInt total = 0;
    for (int i = 0; i < g.size(); ++i) total += s.y(i, 0);
    if (total % s.scale != 0) throw InternalError("energy: non-integral Green function sum");
    return total / s.scale;
}

BigInt green_star(const Complex& g, const Simplex& x, const Simplex& y) {
    g.require(x);
    g.require(y);
    const int u = g.index_of(set_union(x, y));
    if (u < 0) return 0;
    std::int64_t chi = 0;
    for (const Simplex& z : g.simplices())
        if (g[u].subset_of(z)) chi += omega(z.dim());
    return BigInt(omega(x.dim()) * omega(y.dim()) * chi);
}

ExactMatrix green_star_matrix(const Complex& g) {
    const std::vector<std::int64_t> sigma = star_chi(g);
    const int n = g.size();
    ExactMatrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int u = (i == j) ? i : g.index_of(set_union(g[i], g[j]));
            if (u >= 0) m(i, j) = omega(g[i].dim()) * omega(g[j].dim()) * sigma[u];
        }
    return m;
}

Inertia inertia_from_minors(const std::vector<BigInt>& minors) {
    // Sylvester-Jacobi: each sign change in 1, D_1, ..., D_n is a negative
    // eigenvalue.
    Inertia in;
    in.method = "leading-minors";
    int prev = 1;
    for (const BigInt& d : minors) {
        const int s = sign(d);
        if (s == 0) throw InvalidInput("inertia_from_minors: vanishing leading minor");
        if (s != prev) ++in.n;
        else ++in.p;
        prev = s;
    }
    return in;
}

Inertia inertia_exact(const ExactMatrix& m) {
    if (!m.symmetric()) throw InvalidInput("inertia_exact: matrix is not symmetric");
    if (m.rows() > kBerkowitzLimit) {
        BareissResult b = bareiss(m);
        if (!b.leading_minors.empty()) return inertia_from_minors(b.leading_minors);
    }
    SignCount s = descartes_real_rooted(charpoly_berkowitz(m));
    Inertia in;
    in.p = s.positive;
    in.n = s.negative;
    in.z = s.zero;
    in.method = "berkowitz-descartes";
    return in;
}

BigInt supertrace(const Complex& g, const ExactMatrix& m) {
    BigInt s = 0;
    for (int i = 0; i < g.size(); ++i) {
        if (omega(g[i].dim()) == 1) s += m(i, i);
        else s -= m(i, i);
    }
    return s;
}

SupertracePowers supertrace_powers(const Complex& g, const ExactMatrix& green) {
    SupertracePowers sp;
    sp.inverse = supertrace(g, green);
    sp.identity = supertrace(g, ExactMatrix::identity(g.size()));
    sp.connection = supertrace(g, connection_matrix(g));
    return sp;
}

DualProductReport dual_product_check(const Complex& g, const ExactMatrix& green) {
    const int n = g.size();
    DualProductReport r;
    r.one_minus_chi = 1 - euler_characteristic(g);
    ExactMatrix l = connection_matrix(g), lbar = dual_connection_matrix(g);
    ExactMatrix prod = multiply(l, lbar);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) prod(i, j) = -prod(i, j);
    r.det = det_exact(prod);
    r.det_holds = r.det == r.one_minus_chi;
    if (n <= kBerkowitzLimit) {
        // (x - 1)^(n-1) (x - (1 - chi))
        std::vector<BigInt> expect{1};
        auto times_linear = [&](const BigInt& root) {
            std::vector<BigInt> next(expect.size() + 1, BigInt(0));
            for (std::size_t k = 0; k < expect.size(); ++k) {
                next[k] += expect[k];
                next[k + 1] -= root * expect[k];
            }
            expect = std::move(next);
        };
        for (int k = 0; k + 1 < n; ++k) times_linear(1);
        if (n > 0) times_linear(r.one_minus_chi);
        r.literal_eigen_claim = charpoly_berkowitz(prod) == expect;
        r.literal_checked = true;
    }
    // -Lbar g = I - E g: check that I - (-Lbar g) = E g has rank <= 1 and
    // trace chi, which pins its spectrum to {chi, 0, ..., 0}.
    ExactMatrix m = multiply(lbar, green);  // = E g - I
    for (int i = 0; i < n; ++i) m(i, i) += 1;
    const BigInt tr = trace(m);
    r.inverse_form_claim = (n == 0) || (rank_exact(m) <= 1 && tr == 1 - r.one_minus_chi);
    return r;
}

ExactMatrix unsigned_incidence(const Complex& g) {
    const int n = g.size();
    ExactMatrix d(n, n);
    for (int i = 0; i < n; ++i) {
        if (g[i].size() < 2) continue;
        for (int j = 0; j < g[i].size(); ++j) d(i, g.index_of(g[i].without(j))) = 1;
    }
    return d;
}

bool hydrogen_check(const Complex& g, const ExactMatrix& green) {
    if (g.dim() != 1) throw InvalidInput("hydrogen_check: complex must be one-dimensional");
    ExactMatrix d = unsigned_incidence(g);
    ExactMatrix dirac = d + d.transpose();
    return connection_matrix(g) - green == multiply(dirac, dirac);
}

TraceIdentity trace_identity(const Complex& g, const ExactMatrix& green) {
    TraceIdentity t;
    t.trace = trace(connection_matrix(g) - green);
    for (const Simplex& x : g.simplices()) t.sphere_sum += euler_characteristic(unit_sphere(g, x));
    // Generating function of G_1 from the Stirling prediction.
    FVector f = f_vector(g);
    if (!f.empty()) f = stirling_apply(stirling_operator(static_cast<int>(f.size()) - 1), f);
    // f(t) = 1 + sum v_k t^(k+1); f'(t) = sum (k+1) v_k t^k.
    std::int64_t at0 = f.empty() ? 0 : f[0], atm1 = 0;
    for (std::size_t k = 0; k < f.size(); ++k) atm1 += static_cast<std::int64_t>(k + 1) * f[k] * (k % 2 == 0 ? 1 : -1);
    t.derivative = at0 - atm1;
    return t;
}

SpectralSymmetry spectral_symmetry(const Complex& g, const ExactMatrix& green) {
    if (g.dim() != 1) throw InvalidInput("spectral_symmetry: complex must be one-dimensional");
    ExactMatrix l = connection_matrix(g);
    SpectralSymmetry s;
    s.l_squared = charpoly_berkowitz(multiply(l, l));
    s.green_squared = charpoly_berkowitz(multiply(green, green));
    return s;
}

CauchyBinet cauchy_binet_coeffs(const ExactMatrix& f, const ExactMatrix& gm) {
    if (f.rows() != gm.rows() || f.cols() != gm.cols()) throw InvalidInput("cauchy_binet: shape mismatch");
    CauchyBinet cb;
    const int n = f.rows(), m = f.cols();
    std::vector<BigInt> c = charpoly_berkowitz(multiply(f.transpose(), gm));
    for (std::size_t k = 0; k < c.size(); ++k) cb.from_charpoly.push_back(k % 2 == 0 ? c[k] : BigInt(-c[k]));
    if (n > 8 || m > 8) return cb;
    cb.from_minors.assign(m + 1, BigInt(0));
    cb.from_minors[0] = 1;
    // Enumerate equal-size row and column subsets by bitmask.
    for (unsigned rows = 1; rows < (1u << n); ++rows) {
        const int k = __builtin_popcount(rows);
        if (k > m) continue;
        for (unsigned cols = 1; cols < (1u << m); ++cols) {
            if (__builtin_popcount(cols) != k) continue;
            ExactMatrix a(k, k), b(k, k);
            int r = 0;
            for (int i = 0; i < n; ++i) {
                if (!(rows & (1u << i))) continue;
                int s = 0;
                for (int j = 0; j < m; ++j) {
                    if (!(cols & (1u << j))) continue;
                    a(r, s) = f(i, j);
                    b(r, s) = gm(i, j);
                    ++s;
                }
                ++r;
            }
            cb.from_minors[k] += det_exact(a) * det_exact(b);
        }
    }
    return cb;
}

}  // namespace simplexion

#include "simplexion/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "simplexion/conn.hpp"
#include "simplexion/errors.hpp"
#include "simplexion/hodge.hpp"
#include "simplexion/linalg.hpp"
#include "simplexion/refine.hpp"

namespace simplexion {

OperatorKind parse_operator(const std::string& name) {
    if (name == "connection") return OperatorKind::connection;
    if (name == "hodge") return OperatorKind::hodge;
    if (name == "kirchhoff") return OperatorKind::kirchhoff;
    throw InvalidInput("unknown operator '" + name + "'");
}

std::string to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::connection: return "connection";
        case OperatorKind::hodge: return "hodge";
        case OperatorKind::kirchhoff: return "kirchhoff";
    }
    return "?";
}

ExactMatrix kirchhoff(const Graph& g) {
    ExactMatrix k(g.n, g.n);
    for (int v = 0; v < g.n; ++v) {
        k(v, v) = g.degree(v);
        for (int w : g.adj[v]) k(v, w) = -1;
    }
    return k;
}

ExactMatrix operator_matrix(const Complex& g, OperatorKind k) {
    switch (k) {
        case OperatorKind::connection: return connection_matrix(g);
        case OperatorKind::hodge: return hodge_laplacian(g);
        case OperatorKind::kirchhoff: return kirchhoff(skeleton(g));
    }
    throw InvalidInput("unknown operator");
}

Spectrum spectrum(const Complex& g, OperatorKind k) {
    return {k, eig_symmetric(to_real(operator_matrix(g, k))).values};
}

std::vector<Complex128> zeta_from_spectrum(const std::vector<double>& ev, const std::vector<Complex128>& s) {
    std::vector<Complex128> out;
    for (const Complex128& z : s) {
        Complex128 acc = 0;
        for (double mu : ev) acc += std::exp(-z * std::log(mu * mu));
        out.push_back(acc);
    }
    return out;
}

std::vector<Complex128> zeta(const Complex& g, const std::vector<Complex128>& s) {
    return zeta_from_spectrum(spectrum(g, OperatorKind::connection).values, s);
}

double zeta_symmetry_error(const Complex& g, const std::vector<double>& t) {
    const auto ev = spectrum(g, OperatorKind::connection).values;
    double err = 0;
    for (double x : t) {
        const auto z = zeta_from_spectrum(ev, {Complex128(0, x), Complex128(0, -x)});
        err = std::max(err, std::abs(z[0] - z[1]));
    }
    return err;
}

double circle_limit(double x) {
    const double s = std::sin(std::numbers::pi * x / 2);
    return 4 * s * s;
}

double limit_distance(const std::vector<double>& values) {
    const double pi = std::numbers::pi;
    auto prim = [pi](double x) { return 2 * x - 2 / pi * std::sin(pi * x); };
    const int n = static_cast<int>(values.size());
    double total = 0;
    for (int k = 0; k < n; ++k) {
        const double lam = values[k], a = static_cast<double>(k) / n, b = static_cast<double>(k + 1) / n;
        const double root = 2 / pi * std::asin(std::sqrt(std::clamp(lam / 4, 0.0, 1.0)));
        const double c = std::clamp(root, a, b);
        total += lam * (c - a) - (prim(c) - prim(a));
        total += (prim(b) - prim(c)) - lam * (b - c);
    }
    return total;
}

bool LimitReport::monotone() const {
    for (std::size_t i = 1; i < levels.size(); ++i)
        if (!(levels[i].distance < levels[i - 1].distance)) return false;
    return true;
}

LimitReport barycentric_limit_experiment(const Complex& g, int levels, std::int64_t vertex_cap, int connection_cap) {
    if (levels < 0) throw InvalidInput("barycentric_limit_experiment: negative level count");
    LimitReport rep;
    rep.dimension = g.dim();
    Complex cur = g;
    for (int level = 0; level <= levels; ++level) {
        if (level > 0) {
            if (cur.size() > vertex_cap)
                throw ResourceError("refinement level " + std::to_string(level) + " has " + std::to_string(cur.size()) +
                                    " vertices (cap " + std::to_string(vertex_cap) + ")");
            cur = barycentric(cur);
        }
        const Graph sk = skeleton(cur);
        if (sk.n > vertex_cap) throw ResourceError("refinement level exceeds the vertex cap");
        LimitLevel lv;
        lv.level = level;
        lv.vertices = sk.n;
        lv.kirchhoff = eig_symmetric(to_real(kirchhoff(sk))).values;
        lv.distance = limit_distance(lv.kirchhoff);
        const double top = lv.kirchhoff.empty() ? 0.0 : lv.kirchhoff.back();
        for (std::size_t i = 1; i < lv.kirchhoff.size() && top > 0; ++i)
            lv.max_gap = std::max(lv.max_gap, (lv.kirchhoff[i] - lv.kirchhoff[i - 1]) / top);
        if (cur.size() <= connection_cap) {
            const auto ev = spectrum(cur, OperatorKind::connection).values;
            lv.connection_min_abs = INFINITY;
            for (double x : ev) lv.connection_min_abs = std::min(lv.connection_min_abs, std::abs(x));
        }
        rep.levels.push_back(std::move(lv));
    }
    return rep;
}

TreeForest tree_forest_numbers(const Graph& g) {
    const ExactMatrix k = kirchhoff(g);
    const auto c = charpoly_berkowitz(k);
    int m = static_cast<int>(c.size()) - 1;
    while (m > 0 && c[m] == 0) --m;
    TreeForest tf;
    tf.tree = (m % 2 == 0) ? c[m] : BigInt(-c[m]);
    ExactMatrix kp = k;
    for (int i = 0; i < g.n; ++i) kp(i, i) += 1;
    tf.forest = det_exact(kp);
    return tf;
}

DiracEvolution::DiracEvolution(const Complex& g) : d_(to_real(simplexion::dirac(g))) {
    auto e = eig_symmetric(d_, true);
    values_ = std::move(e.values);
    vectors_ = std::move(e.vectors);
    double top = 0;
    for (double v : values_) top = std::max(top, std::abs(v));
    threshold_ = 1e-10 * top;
}

bool DiracEvolution::kernel(int k) const { return std::abs(values_[k]) <= threshold_; }

std::vector<double> DiracEvolution::coords(const std::vector<double>& x) const {
    if (static_cast<int>(x.size()) != size()) throw InvalidInput("state has wrong length");
    std::vector<double> c(size(), 0.0);
    for (int i = 0; i < size(); ++i)
        for (int k = 0; k < size(); ++k) c[k] += vectors_(i, k) * x[i];
    return c;
}

std::vector<double> DiracEvolution::combine(const std::vector<double>& c) const {
    std::vector<double> x(size(), 0.0);
    for (int i = 0; i < size(); ++i)
        for (int k = 0; k < size(); ++k) x[i] += vectors_(i, k) * c[k];
    return x;
}

std::vector<double> DiracEvolution::wave(const std::vector<double>& u0, const std::vector<double>& v0, double t) const {
    const auto a = coords(u0), b = coords(v0);
    std::vector<double> c(size());
    for (int k = 0; k < size(); ++k) {
        const double lam = values_[k];
        c[k] = std::cos(lam * t) * a[k] + (kernel(k) ? t : std::sin(lam * t) / lam) * b[k];
    }
    return combine(c);
}

std::vector<double> DiracEvolution::wave_velocity(const std::vector<double>& u0, const std::vector<double>& v0,
                                                  double t) const {
    const auto a = coords(u0), b = coords(v0);
    std::vector<double> c(size());
    for (int k = 0; k < size(); ++k) {
        const double lam = values_[k];
        c[k] = -lam * std::sin(lam * t) * a[k] + (kernel(k) ? 1.0 : std::cos(lam * t)) * b[k];
    }
    return combine(c);
}

std::vector<Complex128> DiracEvolution::schrodinger(const std::vector<Complex128>& psi0, double t) const {
    std::vector<double> re(size()), im(size());
    if (static_cast<int>(psi0.size()) != size()) throw InvalidInput("state has wrong length");
    for (int i = 0; i < size(); ++i) {
        re[i] = psi0[i].real();
        im[i] = psi0[i].imag();
    }
    const auto a = coords(re), b = coords(im);
    std::vector<double> cr(size()), ci(size());
    for (int k = 0; k < size(); ++k) {
        const Complex128 z = std::exp(Complex128(0, values_[k] * t)) * Complex128(a[k], b[k]);
        cr[k] = z.real();
        ci[k] = z.imag();
    }
    const auto xr = combine(cr), xi = combine(ci);
    std::vector<Complex128> out(size());
    for (int i = 0; i < size(); ++i) out[i] = {xr[i], xi[i]};
    return out;
}

double DiracEvolution::wave_residual(const std::vector<double>& u0, const std::vector<double>& v0, double t,
                                     double h) const {
    const auto up = wave(u0, v0, t + h), u = wave(u0, v0, t), um = wave(u0, v0, t - h);
    const auto hu = d_.apply(d_.apply(u));
    double s = 0;
    for (int i = 0; i < size(); ++i) {
        const double r = (up[i] - 2 * u[i] + um[i]) / (h * h) + hu[i];
        s += r * r;
    }
    return std::sqrt(s);
}

double DiracEvolution::energy(const std::vector<double>& u0, const std::vector<double>& v0, double t) const {
    const auto u = wave(u0, v0, t), v = wave_velocity(u0, v0, t);
    const auto du = d_.apply(u);
    double e = 0;
    for (int i = 0; i < size(); ++i) e += du[i] * du[i] + v[i] * v[i];
    return e;
}

std::vector<double> wave_evolve(const Complex& g, const std::vector<double>& u0, const std::vector<double>& v0,
                                double t) {
    return DiracEvolution(g).wave(u0, v0, t);
}

std::vector<Complex128> schrodinger_evolve(const Complex& g, const std::vector<Complex128>& psi0, double t) {
    return DiracEvolution(g).schrodinger(psi0, t);
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    const int n = m.rows();
    // [[A, -B], [B, A]] for M = A + iB has every eigenvalue of M twice.
    RealMatrix r(2 * n, 2 * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const Complex128 z = 0.5 * (m(i, j) + std::conj(m(j, i)));
            r(i, j) = r(i + n, j + n) = z.real();
            r(i + n, j) = z.imag();
            r(i, j + n) = -z.imag();
        }
    const auto ev = eig_symmetric(r).values;
    std::vector<double> out;
    for (int k = 0; k < n; ++k) out.push_back(0.5 * (ev[2 * k] + ev[2 * k + 1]));
    return out;
}

namespace {

ComplexMatrix commutator(const ComplexMatrix& b, const ComplexMatrix& d) { return b * d - d * b; }

ComplexMatrix scaled(const ComplexMatrix& m, double s) {
    ComplexMatrix r = m;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) *= s;
    return r;
}

double frobenius(const ComplexMatrix& m) {
    double s = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) s += std::norm(m(i, j));
    return std::sqrt(s);
}

}  // namespace

LaxReport lax_flow(const Complex& g, double gamma, double t_end, double dt, double drift_tolerance) {
    if (!(dt > 0) || !(t_end >= 0)) throw InvalidInput("lax_flow: need dt > 0 and t_end >= 0");
    const int n = g.size();
    std::vector<int> grade(n);
    for (int i = 0; i < n; ++i) grade[i] = g[i].dim();
    const ComplexMatrix d0 = to_real(dirac(g)).cast<Complex128>();

    auto rhs = [&](const ComplexMatrix& d) {
        // d: grade(i) = grade(j) + 1, d^*: the transpose block, b: the rest.
        ComplexMatrix b(n, n);
        const Complex128 ig(0, gamma);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                const int gap = grade[i] - grade[j];
                if (gap == 1) b(i, j) = d(i, j);
                else if (gap == -1) b(i, j) = -d(i, j);
                else b(i, j) = ig * d(i, j);
            }
        return commutator(b, d);
    };

    LaxReport rep;
    rep.gamma = gamma;
    rep.t_end = t_end;
    rep.dt = dt;
    rep.steps = static_cast<std::int64_t>(std::llround(t_end / dt));
    ComplexMatrix d = d0;
    for (std::int64_t s = 0; s < rep.steps; ++s) {
        const ComplexMatrix k1 = rhs(d);
        const ComplexMatrix k2 = rhs(d + scaled(k1, dt / 2));
        const ComplexMatrix k3 = rhs(d + scaled(k2, dt / 2));
        const ComplexMatrix k4 = rhs(d + scaled(k3, dt));
        d = d + scaled(k1 + scaled(k2, 2) + scaled(k3, 2) + k4, dt / 6);
    }
    const auto e0 = hermitian_eigenvalues(d0), e1 = hermitian_eigenvalues(d);
    for (int k = 0; k < n; ++k) rep.eigen_drift = std::max(rep.eigen_drift, std::abs(e1[k] - e0[k]));
    rep.square_drift = frobenius(d * d - d0 * d0);
    rep.final_d = std::move(d);
    if (rep.eigen_drift > drift_tolerance)
        throw NumericError("lax_flow: eigenvalue drift " + std::to_string(rep.eigen_drift) + " exceeds tolerance; try dt = " +
                           std::to_string(dt / 4));
    return rep;
}

}  // namespace simplexion

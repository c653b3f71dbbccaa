#include "simplexion/hodge.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <unordered_map>

#include "simplexion/conn.hpp"
#include "simplexion/errors.hpp"

namespace simplexion {

ExactMatrix SparseMatrix::dense() const {
    ExactMatrix m(rows, cols);
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : entries[r]) m(r, c) = v;
    return m;
}

SparseMatrix SparseMatrix::transpose() const {
    SparseMatrix t{cols, rows, std::vector<SparseRow>(cols)};
    for (int r = 0; r < rows; ++r)
        for (const auto& [c, v] : entries[r]) t.entries[c].emplace_back(r, v);
    return t;
}

SparseMatrix sparse_multiply(const SparseMatrix& a, const SparseMatrix& b) {
    if (a.cols != b.rows) throw InvalidInput("sparse_multiply: shape mismatch");
    SparseMatrix c{a.rows, b.cols, std::vector<SparseRow>(a.rows)};
    std::map<int, std::int64_t> acc;
    for (int r = 0; r < a.rows; ++r) {
        acc.clear();
        for (const auto& [k, v] : a.entries[r])
            for (const auto& [j, w] : b.entries[k]) acc[j] += v * w;
        for (const auto& [j, v] : acc)
            if (v != 0) c.entries[r].emplace_back(j, v);
    }
    return c;
}

bool is_zero(const SparseMatrix& m) {
    for (const auto& row : m.entries)
        for (const auto& e : row)
            if (e.second != 0) return false;
    return true;
}

int rank(const SparseMatrix& m) { return sparse_rank(m.entries); }

ChainComplexData exterior_derivative(const Complex& g) {
    ChainComplexData c;
    c.dims = f_vector(g);
    const int r = static_cast<int>(c.dims.size());
    c.offset.assign(r, 0);
    for (int k = 1; k < r; ++k) c.offset[k] = c.offset[k - 1] + static_cast<int>(c.dims[k - 1]);
    for (int k = 0; k + 1 < r; ++k) {
        SparseMatrix d{static_cast<int>(c.dims[k + 1]), static_cast<int>(c.dims[k]), {}};
        d.entries.resize(d.rows);
        for (int row = 0; row < d.rows; ++row) {
            const Simplex& y = g[c.offset[k + 1] + row];
            for (int j = 0; j < y.size(); ++j)
                d.entries[row].emplace_back(g.index_of(y.without(j)) - c.offset[k], (j % 2 == 0) ? 1 : -1);
            std::sort(d.entries[row].begin(), d.entries[row].end());
        }
        c.d.push_back(std::move(d));
    }
    for (std::size_t k = 0; k + 1 < c.d.size(); ++k)
        if (!is_zero(sparse_multiply(c.d[k + 1], c.d[k]))) throw InternalError("exterior derivative: dd != 0");
    return c;
}

std::int64_t CohomologyReport::alternating_sum() const {
    std::int64_t s = 0;
    for (std::size_t k = 0; k < betti.size(); ++k) s += (k % 2 == 0) ? betti[k] : -betti[k];
    return s;
}

CohomologyReport cohomology(const ChainComplexData& c) {
    const int r = static_cast<int>(c.dims.size());
    std::vector<std::int64_t> rk(r, 0);
    for (int k = 0; k + 1 < r; ++k) rk[k] = rank(c.d[k]);
    CohomologyReport rep;
    for (int k = 0; k < r; ++k) rep.betti.push_back(c.dims[k] - rk[k] - (k > 0 ? rk[k - 1] : 0));
    rep.poincare_poly = rep.betti;
    rep.euler_poly.assign(c.dims.begin(), c.dims.end());
    return rep;
}

CohomologyReport betti(const Complex& g) { return cohomology(exterior_derivative(g)); }

ExactMatrix full_derivative(const Complex& g) {
    ExactMatrix d(g.size(), g.size());
    for (int i = 0; i < g.size(); ++i) {
        const Simplex& y = g[i];
        if (y.size() < 2) continue;
        for (int j = 0; j < y.size(); ++j) d(i, g.index_of(y.without(j))) = (j % 2 == 0) ? 1 : -1;
    }
    return d;
}

ExactMatrix dirac(const Complex& g) {
    ExactMatrix d = full_derivative(g);
    return d + d.transpose();
}

ExactMatrix hodge_laplacian(const Complex& g) {
    ExactMatrix d = dirac(g);
    return multiply(d, d);
}

std::vector<ExactMatrix> hodge_blocks(const ChainComplexData& c) {
    const int r = static_cast<int>(c.dims.size());
    std::vector<ExactMatrix> h;
    for (int k = 0; k < r; ++k) {
        const int n = static_cast<int>(c.dims[k]);
        ExactMatrix b(n, n);
        if (k > 0) {
            ExactMatrix dm = c.d[k - 1].dense();
            b = b + multiply(dm, dm.transpose());
        }
        if (k + 1 < r) {
            ExactMatrix dk = c.d[k].dense();
            b = b + multiply(dk.transpose(), dk);
        }
        h.push_back(std::move(b));
    }
    return h;
}

std::vector<std::int64_t> numeric_betti(const Complex& g, double tol) {
    std::vector<std::int64_t> out;
    for (const ExactMatrix& h : hodge_blocks(exterior_derivative(g))) {
        auto ev = eig_symmetric(to_real(h)).values;
        out.push_back(std::count_if(ev.begin(), ev.end(), [&](double x) { return std::abs(x) < tol; }));
    }
    return out;
}

bool McKeanSinger::exact_holds() const {
    if (exact.empty() || exact[0] != chi) return false;
    for (std::size_t k = 1; k < exact.size(); ++k)
        if (exact[k] != 0) return false;
    return true;
}

bool McKeanSinger::numeric_holds(double tol) const {
    for (double v : numeric)
        if (!(std::abs(v - static_cast<double>(chi)) < tol)) return false;
    return true;
}

namespace {

BigInt frobenius_inner(const ExactMatrix& a, const ExactMatrix& b) {
    BigInt s = 0;
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) s += a(i, j) * b(j, i);
    return s;
}

}  // namespace

McKeanSinger mckean_singer(const Complex& g, const std::vector<double>& times, int max_power) {
    if (max_power < 0 || max_power > 6) throw InvalidInput("mckean_singer: powers limited to 0..6");
    McKeanSinger ms;
    ms.chi = euler_characteristic(g);
    ms.times = times;
    ms.exact.assign(max_power + 1, BigInt(0));
    ms.numeric.assign(times.size(), 0.0);
    const std::vector<ExactMatrix> blocks = hodge_blocks(exterior_derivative(g));
    for (std::size_t k = 0; k < blocks.size(); ++k) {
        const int w = (k % 2 == 0) ? 1 : -1;
        const ExactMatrix& h1 = blocks[k];
        // tr(H^m) from H, H^2, H^3 using tr(AB) for the split m = i + j.
        std::vector<ExactMatrix> pw{ExactMatrix::identity(h1.rows()), h1};
        if (max_power >= 2) pw.push_back(multiply(h1, h1));
        if (max_power >= 5) pw.push_back(multiply(pw[2], h1));
        for (int m = 0; m <= max_power; ++m) {
            const int i = m / 2, j = m - m / 2;
            ms.exact[m] += w * frobenius_inner(pw[i], pw[j]);
        }
        const auto ev = eig_symmetric(to_real(h1)).values;
        for (std::size_t t = 0; t < times.size(); ++t)
            for (double lam : ev) ms.numeric[t] += w * std::exp(-times[t] * lam);
    }
    return ms;
}

bool is_automorphism(const Complex& g, const VertexMap& t) {
    const auto& vs = g.vertices();
    std::vector<int> image;
    for (int v : vs) {
        if (v >= static_cast<int>(t.size())) return false;
        image.push_back(t[v]);
    }
    std::sort(image.begin(), image.end());
    if (image != vs) return false;
    for (const Simplex& x : g.simplices()) {
        std::vector<int> y;
        for (int v : x) y.push_back(t[v]);
        std::sort(y.begin(), y.end());
        if (!g.contains(Simplex::from_sorted(y))) return false;
    }
    return true;
}

std::vector<VertexMap> automorphisms(const Complex& g) {
    const auto& vs = g.vertices();
    const int n = static_cast<int>(vs.size());
    const Graph sk = skeleton(g);
    const int maxid = vs.empty() ? 0 : vs.back() + 1;
    std::vector<int> assign(n, -1);
    std::vector<char> used(n, 0);
    std::vector<VertexMap> out;
    std::function<void(int)> rec = [&](int i) {
        if (i == n) {
            VertexMap t(maxid, -1);
            for (int k = 0; k < n; ++k) t[vs[k]] = vs[assign[k]];
            if (is_automorphism(g, t)) out.push_back(std::move(t));
            return;
        }
        for (int c = 0; c < n; ++c) {
            if (used[c] || sk.degree(c) != sk.degree(i)) continue;
            bool ok = true;
            for (int k = 0; k < i && ok; ++k) ok = sk.has_edge(i, k) == sk.has_edge(c, assign[k]);
            if (!ok) continue;
            used[c] = 1;
            assign[i] = c;
            rec(i + 1);
            used[c] = 0;
        }
        assign[i] = -1;
    };
    rec(0);
    return out;
}

namespace {

RationalMatrix to_rational(const ExactMatrix& m) {
    RationalMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
    return r;
}

}  // namespace

LefschetzReport lefschetz(const Complex& g, const VertexMap& t) {
    if (!is_automorphism(g, t)) throw InvalidInput("lefschetz: map is not a simplicial automorphism");
    LefschetzReport rep;
    const ChainComplexData c = exterior_derivative(g);
    const int r = static_cast<int>(c.dims.size());
    rep.cohomological = 0;
    for (int k = 0; k < r; ++k) {
        const int n = static_cast<int>(c.dims[k]);
        // Pullback (T*F)(x) = sign * F(sorted T(x)).
        RationalMatrix pull(n, n);
        for (int a = 0; a < n; ++a) {
            const Simplex& x = g[c.offset[k] + a];
            std::vector<int> img;
            for (int v : x) img.push_back(t[v]);
            const int s = permutation_sign(img);
            std::sort(img.begin(), img.end());
            pull(a, g.index_of(Simplex::from_sorted(img)) - c.offset[k]) = s;
        }
        std::vector<std::vector<Rational>> z;
        if (k + 1 < r) z = nullspace(to_rational(c.d[k].dense()));
        else
            for (int a = 0; a < n; ++a) {
                std::vector<Rational> e(n, Rational(0));
                e[a] = 1;
                z.push_back(std::move(e));
            }
        std::vector<std::vector<Rational>> cols;  // coboundaries then cocycles
        if (k > 0) {
            ExactMatrix dm = c.d[k - 1].dense();
            for (int j = 0; j < dm.cols(); ++j) {
                std::vector<Rational> col(n);
                for (int i = 0; i < n; ++i) col[i] = Rational(dm(i, j));
                cols.push_back(std::move(col));
            }
        }
        const int nb_all = static_cast<int>(cols.size());
        cols.insert(cols.end(), z.begin(), z.end());
        RationalMatrix m(n, static_cast<int>(cols.size()));
        for (int j = 0; j < m.cols(); ++j)
            for (int i = 0; i < n; ++i) m(i, j) = cols[j][i];
        const std::vector<int> piv = rref(m);
        std::vector<int> bsel, csel;
        for (int p : piv) (p < nb_all ? bsel : csel).push_back(p);
        const int h = static_cast<int>(csel.size());
        Rational tr = 0;
        if (h > 0) {
            const int nb = static_cast<int>(bsel.size());
            RationalMatrix aug(n, nb + 2 * h);
            for (int j = 0; j < nb; ++j)
                for (int i = 0; i < n; ++i) aug(i, j) = cols[bsel[j]][i];
            for (int j = 0; j < h; ++j) {
                const auto& cj = cols[csel[j]];
                for (int i = 0; i < n; ++i) aug(i, nb + j) = cj[i];
                for (int i = 0; i < n; ++i) {
                    Rational s = 0;
                    for (int q = 0; q < n; ++q)
                        if (pull(i, q) != 0) s += pull(i, q) * cj[q];
                    aug(i, nb + h + j) = s;
                }
            }
            rref(aug);
            for (int j = 0; j < h; ++j) tr += aug(nb + j, nb + h + j);
        }
        rep.traces.push_back(tr);
        rep.cohomological += (k % 2 == 0) ? tr : Rational(-tr);
    }
    for (const Simplex& x : g.simplices()) {
        std::vector<int> img;
        for (int v : x) img.push_back(t[v]);
        std::vector<int> sorted = img;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != x.vertices()) continue;
        rep.fixed_point_sum += omega(x.dim()) * permutation_sign(img);
    }
    return rep;
}

namespace {

RealMatrix signs_matrix(const Complex& g) {
    RealMatrix s(g.size(), g.size());
    for (int i = 0; i < g.size(); ++i) s(i, i) = omega(g[i].dim());
    return s;
}

std::vector<std::int64_t> poly_product(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::int64_t> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

double multiset_error(std::vector<double> a, std::vector<double> b) {
    if (a.size() != b.size()) return INFINITY;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    double e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) e = std::max(e, std::abs(a[i] - b[i]));
    return e;
}

}  // namespace

bool KuennethReport::passed(double tol) const {
    return poincare_multiplicative && euler_multiplicative && hodge_spectrum_error < tol && connection_is_kronecker &&
           connection_spectrum_error < tol;
}

KuennethReport kuenneth_check(const Complex& a, const Complex& b, int cap) {
    const std::int64_t cells = static_cast<std::int64_t>(a.size()) * b.size();
    if (cells > cap) throw ResourceError("kuenneth_check: product has " + std::to_string(cells) + " cells (cap " +
                                         std::to_string(cap) + ")");
    KuennethReport rep;
    const ProductPoset pp = ring_product(a, b);
    rep.product = betti(product_complex(pp));
    rep.left = betti(a);
    rep.right = betti(b);
    rep.poincare_multiplicative =
        poly_product(rep.product.poincare_poly, {1}) == poly_product(rep.left.poincare_poly, rep.right.poincare_poly);

    std::vector<std::int64_t> cell_poly;
    for (const ProductCell& c : pp.cells) {
        if (static_cast<int>(cell_poly.size()) <= c.dim()) cell_poly.resize(c.dim() + 1, 0);
        ++cell_poly[c.dim()];
    }
    rep.euler_multiplicative = cell_poly == poly_product(rep.left.euler_poly, rep.right.euler_poly);

    // Cell complex derivative d = dA x I + S_A x dB; its Hodge operator is
    // H_A x I + I x H_B.
    const RealMatrix da = to_real(full_derivative(a)), db = to_real(full_derivative(b));
    const RealMatrix d = kron(da, RealMatrix::identity(b.size())) + kron(signs_matrix(a), db);
    const RealMatrix dd = d + d.transpose();
    const auto hp = eig_symmetric(dd * dd).values;
    const auto ha = eig_symmetric(to_real(hodge_laplacian(a))).values;
    const auto hb = eig_symmetric(to_real(hodge_laplacian(b))).values;
    std::vector<double> sums;
    for (double x : ha)
        for (double y : hb) sums.push_back(x + y);
    rep.hodge_spectrum_error = multiset_error(hp, sums);

    const ExactMatrix la = connection_matrix(a), lb = connection_matrix(b);
    const ExactMatrix lk = kron(la, lb);
    bool same = true;
    const int n = static_cast<int>(pp.cells.size());
    for (int i = 0; i < n && same; ++i)
        for (int j = 0; j < n && same; ++j) {
            const bool hit = intersects(pp.cells[i].left, pp.cells[j].left) && intersects(pp.cells[i].right, pp.cells[j].right);
            same = (lk(i, j) == 1) == hit && (lk(i, j) == 0 || lk(i, j) == 1);
        }
    rep.connection_is_kronecker = same;
    const auto lp = eig_symmetric(to_real(lk)).values;
    const auto ea = eig_symmetric(to_real(la)).values, eb = eig_symmetric(to_real(lb)).values;
    std::vector<double> prods;
    for (double x : ea)
        for (double y : eb) prods.push_back(x * y);
    rep.connection_spectrum_error = multiset_error(lp, prods);
    return rep;
}

InteractionReport interaction_cohomology(const Complex& g) {
    const int n = g.size();
    std::vector<std::vector<std::pair<int, int>>> grade;
    std::unordered_map<std::int64_t, int> local;
    auto key = [n](int i, int j) { return static_cast<std::int64_t>(i) * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (!intersects(g[i], g[j])) continue;
            const int k = g[i].dim() + g[j].dim();
            if (static_cast<int>(grade.size()) <= k) grade.resize(k + 1);
            local.emplace(key(i, j), static_cast<int>(grade[k].size()));
            grade[k].emplace_back(i, j);
        }
    ChainComplexData c;
    for (const auto& gr : grade) c.dims.push_back(static_cast<std::int64_t>(gr.size()));
    for (std::size_t k = 0; k + 1 < grade.size(); ++k) {
        SparseMatrix d{static_cast<int>(grade[k + 1].size()), static_cast<int>(grade[k].size()), {}};
        d.entries.resize(d.rows);
        for (int row = 0; row < d.rows; ++row) {
            const auto [xi, yi] = grade[k + 1][row];
            const Simplex &x = g[xi], &y = g[yi];
            auto& out = d.entries[row];
            if (x.size() > 1)
                for (int a = 0; a < x.size(); ++a) {
                    const Simplex f = x.without(a);
                    if (intersects(f, y)) out.emplace_back(local.at(key(g.index_of(f), yi)), (a % 2 == 0) ? 1 : -1);
                }
            if (y.size() > 1)
                for (int a = 0; a < y.size(); ++a) {
                    const Simplex f = y.without(a);
                    if (intersects(x, f))
                        out.emplace_back(local.at(key(xi, g.index_of(f))), omega(x.dim()) * ((a % 2 == 0) ? 1 : -1));
                }
            std::sort(out.begin(), out.end());
        }
        c.d.push_back(std::move(d));
    }
    InteractionReport rep;
    rep.dd_zero = true;
    for (std::size_t k = 0; k + 1 < c.d.size(); ++k)
        if (!is_zero(sparse_multiply(c.d[k + 1], c.d[k]))) rep.dd_zero = false;
    rep.cohomology = cohomology(c);
    rep.wu = wu_characteristic(g, 2);
    return rep;
}

std::vector<Rational> wu_curvature(const Complex& g) {
    const auto sigma = star_chi(g);
    const auto up = up_sets(g);
    // tau(x) = sum of omega(y) over y meeting x = sum_{s subset x} omega(s) sigma(s)
    std::vector<std::int64_t> tau(g.size(), 0);
    for (int s = 0; s < g.size(); ++s) {
        const std::int64_t w = omega(g[s].dim()) * sigma[s];
        tau[s] += w;
        for (int x : up[s]) tau[x] += w;
    }
    const auto& vs = g.vertices();
    std::vector<Rational> k(vs.size(), Rational(0));
    for (int i = 0; i < g.size(); ++i) {
        const Rational share = Rational(omega(g[i].dim()) * tau[i], g[i].size());
        for (int v : g[i]) k[std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()] += share;
    }
    return k;
}

AlexanderDual alexander_dual(const Complex& g, const std::vector<int>& ground) {
    std::vector<int> v = ground;
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    for (int x : g.vertices())
        if (!std::binary_search(v.begin(), v.end(), x)) throw InvalidInput("alexander_dual: vertex outside ground set");
    const int n = static_cast<int>(v.size());
    if (n > 20) throw ResourceError("alexander_dual: ground set too large");
    const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    auto in_g = [&](std::uint32_t mask) {
        if (mask == 0) return true;  // the empty face
        std::vector<int> s;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) s.push_back(v[j]);
        return g.contains(Simplex::from_sorted(s));
    };
    AlexanderDual d;
    std::vector<Simplex> sets;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (in_g(full & ~mask)) continue;
        std::vector<int> s;
        for (int j = 0; j < n; ++j)
            if (mask & (1u << j)) s.push_back(v[j]);
        sets.push_back(Simplex::from_sorted(s));
    }
    d.complex = Complex::from_closed(std::move(sets));
    d.contains_empty = !in_g(full);
    return d;
}

std::vector<std::int64_t> reduced_betti(const Complex& g, bool contains_empty) {
    if (!contains_empty) return {};
    if (g.empty()) return {1};
    std::vector<std::int64_t> b = betti(g).betti;
    b[0] -= 1;
    b.insert(b.begin(), 0);
    return b;
}

bool alexander_duality_check(const Complex& g, const std::vector<int>& ground) {
    const AlexanderDual d = alexander_dual(g, ground);
    const int n = static_cast<int>(ground.size());
    const auto bg = reduced_betti(g, true);
    const auto bd = reduced_betti(d.complex, d.contains_empty);
    auto get = [](const std::vector<std::int64_t>& b, int k) -> std::int64_t {
        const int i = k + 1;
        return (i >= 0 && i < static_cast<int>(b.size())) ? b[i] : 0;
    };
    for (int k = -1; k <= n; ++k)
        if (get(bd, k) != get(bg, n - 3 - k)) return false;
    return true;
}

std::pair<BigInt, BigInt> stokes_pairing(const Complex& g, int k, const std::vector<BigInt>& form,
                                         const std::vector<BigInt>& chain) {
    const ChainComplexData c = exterior_derivative(g);
    if (k < 0 || k + 1 >= static_cast<int>(c.dims.size())) throw InvalidInput("stokes_pairing: degree out of range");
    const SparseMatrix& d = c.d[k];
    if (static_cast<int>(form.size()) != d.cols || static_cast<int>(chain.size()) != d.rows)
        throw InvalidInput("stokes_pairing: dimension mismatch");
    BigInt lhs = 0, rhs = 0;
    std::vector<BigInt> boundary(d.cols, BigInt(0));
    for (int r = 0; r < d.rows; ++r) {
        BigInt df = 0;
        for (const auto& [col, v] : d.entries[r]) {
            df += v * form[col];
            boundary[col] += v * chain[r];
        }
        lhs += df * chain[r];
    }
    for (int i = 0; i < d.cols; ++i) rhs += form[i] * boundary[i];
    return {lhs, rhs};
}

}  // namespace simplexion

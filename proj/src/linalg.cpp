#include "simplexion/linalg.hpp"

#include <algorithm>
#include <map>

namespace simplexion {
namespace {

template <class T>
Matrix<T> narrow(const ExactMatrix& a) {
    Matrix<T> m(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            if constexpr (std::is_same_v<T, Checked64>)
                m(i, j) = to_checked(a(i, j));
            else
                m(i, j) = a(i, j);
        }
    return m;
}

// Runs f<Checked64>, retrying with BigInt on overflow.
template <class F>
auto with_fallback(F&& f) {
    try {
        return f(Checked64{});
    } catch (const Overflow&) {
        return f(BigInt{});
    }
}

template <class T>
struct ElimState {
    T last{1};  // final pivot, equal to +-det
    int swap_sign = 1;
    std::vector<T> minors;
    Matrix<T> upper;
};

// Bareiss forward elimination over the first n columns of an n x m matrix.
// Rows below the current pivot hold their true values times a common lazy
// sign g, so a step whose pivot equals +-prev touches only the nonzero
// entries of the pivot row.
template <class T>
ElimState<T> forward(Matrix<T> a, int n) {
    ElimState<T> st;
    const int m = a.cols();
    T prev(1);
    int g = 1;
    std::vector<int> nz;
    for (int k = 0; k < n; ++k) {
        int p = k;
        while (p < n && a(p, k) == T(0)) ++p;
        if (p == n) {
            st.last = T(0);
            st.upper = std::move(a);
            return st;
        }
        if (p != k) {
            a.swap_rows(p, k);
            st.swap_sign = -st.swap_sign;
        }
        if (g == -1)
            for (int j = k; j < m; ++j) a(k, j) = -a(k, j);
        const T piv = a(k, k);
        st.minors.push_back(piv);
        int eps = 0;
        if (piv == prev) eps = 1;
        else if (piv == -prev) eps = -1;
        if (eps != 0) {
            nz.clear();
            for (int j = k + 1; j < m; ++j)
                if (a(k, j) != T(0)) nz.push_back(j);
            const T* rk = a.row(k);
            for (int i = k + 1; i < n; ++i) {
                T* ri = a.row(i);
                const T aik = ri[k];
                if (aik == T(0)) continue;
                const T f = eps == 1 ? aik : -aik;
                if (prev == T(1)) {
                    for (int j : nz) ri[j] -= f * rk[j];
                } else if (prev == T(-1)) {
                    for (int j : nz) ri[j] += f * rk[j];
                } else {
                    for (int j : nz) ri[j] -= (f * rk[j]) / prev;
                }
                ri[k] = T(0);
            }
            g *= eps;
        } else {
            if (g == -1) {
                for (int i = k + 1; i < n; ++i)
                    for (int j = k; j < m; ++j) a(i, j) = -a(i, j);
                g = 1;
            }
            const T* rk = a.row(k);
            for (int i = k + 1; i < n; ++i) {
                T* ri = a.row(i);
                const T aik = ri[k];
                for (int j = k + 1; j < m; ++j) ri[j] = (piv * ri[j] - aik * rk[j]) / prev;
                ri[k] = T(0);
            }
        }
        prev = piv;
    }
    st.last = prev;
    st.upper = std::move(a);
    return st;
}

template <class T>
T narrow_scalar(const BigInt& x) {
    if constexpr (std::is_same_v<T, Checked64>)
        return to_checked(x);
    else
        return x;
}

// Solves A Y = scale * B with scale = +-det(A).
template <class T>
MultiSolution solve_impl(const ExactMatrix& a, const ExactMatrix& b) {
    const int n = a.rows(), r = b.cols();
    Matrix<T> aug(n, n + r);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = narrow_scalar<T>(a(i, j));
        for (int j = 0; j < r; ++j) aug(i, n + j) = narrow_scalar<T>(b(i, j));
    }
    ElimState<T> st = forward(std::move(aug), n);
    if (st.last == T(0)) throw InternalError("solve: singular matrix");
    const Matrix<T>& u = st.upper;
    MultiSolution out;
    out.scale = to_big(st.last);
    out.det = out.scale * st.swap_sign;
    if (st.swap_sign == 1)
        for (const T& m : st.minors) out.leading_minors.push_back(to_big(m));
    out.y = ExactMatrix(n, r);
    std::vector<T> y(n);
    for (int c = 0; c < r; ++c) {
        for (int i = n - 1; i >= 0; --i) {
            T acc = st.last * u(i, n + c);
            for (int j = i + 1; j < n; ++j)
                if (u(i, j) != T(0)) acc -= u(i, j) * y[j];
            y[i] = acc / u(i, i);
        }
        for (int i = 0; i < n; ++i) out.y(i, c) = to_big(y[i]);
    }
    return out;
}

template <class T>
std::vector<BigInt> berkowitz_impl(const ExactMatrix& src) {
    const int n = src.rows();
    Matrix<T> a = narrow<T>(src);
    std::vector<T> q{T(1)};
    std::vector<T> col, next;
    for (int r = 1; r <= n; ++r) {
        const int m = r - 1;
        std::vector<T> t(r + 1, T(0));
        t[0] = T(1);
        t[1] = -a(m, m);
        col.assign(m, T(0));
        for (int i = 0; i < m; ++i) col[i] = a(i, m);
        for (int k = 2; k <= r; ++k) {
            T acc(0);
            for (int i = 0; i < m; ++i) acc += a(m, i) * col[i];
            t[k] = -acc;
            if (k == r) break;
            next.assign(m, T(0));
            for (int i = 0; i < m; ++i) {
                T s(0);
                for (int j = 0; j < m; ++j)
                    if (a(i, j) != T(0)) s += a(i, j) * col[j];
                next[i] = s;
            }
            col.swap(next);
        }
        std::vector<T> p(r + 1, T(0));
        for (int i = 0; i <= r; ++i)
            for (int j = 0; j < r && j <= i; ++j) p[i] += t[i - j] * q[j];
        q.swap(p);
    }
    std::vector<BigInt> out;
    out.reserve(q.size());
    for (const T& v : q) out.push_back(to_big(v));
    return out;
}

template <class T>
int rank_impl(const ExactMatrix& src) {
    Matrix<T> a = narrow<T>(src);
    const int n = a.rows(), m = a.cols();
    T prev(1);
    int r = 0;
    for (int c = 0; c < m && r < n; ++c) {
        int p = r;
        while (p < n && a(p, c) == T(0)) ++p;
        if (p == n) continue;
        a.swap_rows(p, r);
        const T piv = a(r, c);
        for (int i = r + 1; i < n; ++i) {
            const T aic = a(i, c);
            for (int j = c + 1; j < m; ++j) a(i, j) = (piv * a(i, j) - aic * a(r, j)) / prev;
            a(i, c) = T(0);
        }
        prev = piv;
        ++r;
    }
    return r;
}

template <class T>
using SRow = std::vector<std::pair<int, T>>;

template <class T>
void normalise(SRow<T>& row) {
    if (row.empty()) return;
    T g(0);
    for (auto& e : row) {
        g = gcd(g, e.second);
        if (g == T(1)) break;
    }
    if (row.front().second < T(0)) g = -g;
    if (g != T(1))
        for (auto& e : row) e.second /= g;
}

// Incremental echelon reduction keyed by leading column.
template <class T>
int sparse_rank_impl(const std::vector<SparseRow>& rows) {
    std::map<int, SRow<T>> pivots;
    SRow<T> cur, tmp;
    for (const SparseRow& in : rows) {
        cur.clear();
        for (const auto& [c, v] : in)
            if (v != 0) cur.emplace_back(c, T(v));
        std::sort(cur.begin(), cur.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
        normalise(cur);
        while (!cur.empty()) {
            auto it = pivots.find(cur.front().first);
            if (it == pivots.end()) break;
            const SRow<T>& pr = it->second;
            const T a = pr.front().second, b = cur.front().second;
            // cur <- a*cur - b*pr
            tmp.clear();
            std::size_t i = 0, j = 0;
            while (i < cur.size() || j < pr.size()) {
                if (j == pr.size() || (i < cur.size() && cur[i].first < pr[j].first)) {
                    tmp.emplace_back(cur[i].first, a * cur[i].second);
                    ++i;
                } else if (i == cur.size() || pr[j].first < cur[i].first) {
                    tmp.emplace_back(pr[j].first, -(b * pr[j].second));
                    ++j;
                } else {
                    T v = a * cur[i].second - b * pr[j].second;
                    if (v != T(0)) tmp.emplace_back(cur[i].first, v);
                    ++i;
                    ++j;
                }
            }
            cur.swap(tmp);
            normalise(cur);
        }
        if (!cur.empty()) pivots.emplace(cur.front().first, cur);
    }
    return static_cast<int>(pivots.size());
}

}  // namespace

BareissResult bareiss(const ExactMatrix& a) {
    if (!a.square()) throw InvalidInput("bareiss: matrix not square");
    return with_fallback([&](auto tag) {
        using T = decltype(tag);
        ElimState<T> st = forward(narrow<T>(a), a.rows());
        BareissResult r;
        r.det = to_big(st.last) * st.swap_sign;
        if (st.swap_sign == 1 && st.last != T(0) && static_cast<int>(st.minors.size()) == a.rows())
            for (const T& m : st.minors) r.leading_minors.push_back(to_big(m));
        return r;
    });
}

BigInt det_exact(const ExactMatrix& a) { return bareiss(a).det; }

MultiSolution solve_scaled(const ExactMatrix& a, const ExactMatrix& b) {
    if (!a.square() || b.rows() != a.rows()) throw InvalidInput("solve: shape mismatch");
    return with_fallback([&](auto tag) { return solve_impl<decltype(tag)>(a, b); });
}

ExactMatrix unimodular_inverse(const ExactMatrix& a) {
    MultiSolution ad = solve_scaled(a, ExactMatrix::identity(a.rows()));
    if (ad.scale == 1) return ad.y;
    if (ad.scale == -1) {
        ExactMatrix m = ad.y;
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
        return m;
    }
    throw InternalError("unimodular_inverse: matrix is not unimodular");
}

std::vector<BigInt> charpoly_berkowitz(const ExactMatrix& a) {
    if (!a.square()) throw InvalidInput("charpoly: matrix not square");
    return with_fallback([&](auto tag) { return berkowitz_impl<decltype(tag)>(a); });
}

int rank_exact(const ExactMatrix& a) {
    return with_fallback([&](auto tag) { return rank_impl<decltype(tag)>(a); });
}

ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    if (a.cols() != b.rows()) throw InvalidInput("multiply: shape mismatch");
    return with_fallback([&](auto tag) {
        using T = decltype(tag);
        Matrix<T> c = narrow<T>(a) * narrow<T>(b);
        ExactMatrix out(c.rows(), c.cols());
        for (int i = 0; i < c.rows(); ++i)
            for (int j = 0; j < c.cols(); ++j) out(i, j) = to_big(c(i, j));
        return out;
    });
}

int sparse_rank(const std::vector<SparseRow>& rows) {
    return with_fallback([&](auto tag) { return sparse_rank_impl<decltype(tag)>(rows); });
}

std::vector<int> rref(RationalMatrix& m) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
        int p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        const Rational inv = 1 / m(r, c);
        for (int j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Rational f = m(i, c);
            for (int j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<Rational>> nullspace(const RationalMatrix& m) {
    RationalMatrix a = m;
    std::vector<int> piv = rref(a);
    std::vector<bool> is_piv(a.cols(), false);
    for (int c : piv) is_piv[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (int f = 0; f < a.cols(); ++f) {
        if (is_piv[f]) continue;
        std::vector<Rational> v(a.cols(), Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a(static_cast<int>(r), f);
        basis.push_back(std::move(v));
    }
    return basis;
}

SignCount descartes_real_rooted(const std::vector<BigInt>& c) {
    const int n = static_cast<int>(c.size()) - 1;
    SignCount s;
    int last = n;
    while (last > 0 && c[last] == 0) {
        ++s.zero;
        --last;
    }
    auto changes = [&](bool flip) {
        int count = 0, prev = 0;
        for (int k = 0; k <= last; ++k) {
            int sg = sign(c[k]);
            // coefficient of x^(n-k); substituting -x flips odd powers
            if (flip && ((n - k) % 2 == 1)) sg = -sg;
            if (sg == 0) continue;
            if (prev != 0 && sg != prev) ++count;
            prev = sg;
        }
        return count;
    };
    s.positive = changes(false);
    s.negative = changes(true);
    return s;
}

}  // namespace simplexion

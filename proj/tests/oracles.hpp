#pragma once
// Brute-force reference computations used by the tests. They work on plain
// vectors and deliberately avoid the library algorithms they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace oracle {

using Set = std::vector<int>;
using Big = boost::multiprecision::mpz_int;
using Q = boost::multiprecision::mpq_rational;
using IntMat = std::vector<std::vector<std::int64_t>>;

inline std::set<Set> closure(const std::vector<Set>& sets) {
    std::set<Set> out;
    for (Set s : sets) {
        std::sort(s.begin(), s.end());
        const int k = static_cast<int>(s.size());
        for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
            Set t;
            for (int j = 0; j < k; ++j)
                if (mask & (1u << j)) t.push_back(s[j]);
            out.insert(t);
        }
    }
    return out;
}

// Canonical order: by size, then lexicographic.
inline std::vector<Set> ordered(const std::set<Set>& s) {
    std::vector<Set> v(s.begin(), s.end());
    std::stable_sort(v.begin(), v.end(), [](const Set& a, const Set& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return v;
}

inline std::vector<std::int64_t> fvector(const std::vector<Set>& g) {
    std::vector<std::int64_t> f;
    for (const Set& s : g) {
        if (f.size() < s.size()) f.resize(s.size(), 0);
        ++f[s.size() - 1];
    }
    return f;
}

inline int w(const Set& s) { return (s.size() % 2 == 1) ? 1 : -1; }

inline std::int64_t euler(const std::vector<Set>& g) {
    std::int64_t c = 0;
    for (const Set& s : g) c += w(s);
    return c;
}

inline bool meets(const Set& a, const Set& b) {
    for (int x : a)
        if (std::find(b.begin(), b.end(), x) != b.end()) return true;
    return false;
}

inline bool subset(const Set& a, const Set& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Sum over ordered k-tuples with nonempty common intersection.
inline std::int64_t wu(const std::vector<Set>& g, int k) {
    std::int64_t total = 0;
    std::vector<int> idx(k, 0);
    const int n = static_cast<int>(g.size());
    std::function<void(int, Set, int)> rec = [&](int depth, Set common, int sign) {
        if (depth == k) {
            total += sign;
            return;
        }
        for (int i = 0; i < n; ++i) {
            Set c;
            if (depth == 0) c = g[i];
            else std::set_intersection(common.begin(), common.end(), g[i].begin(), g[i].end(), std::back_inserter(c));
            if (c.empty()) continue;
            rec(depth + 1, c, sign * w(g[i]));
        }
    };
    rec(0, {}, 1);
    return total;
}

inline IntMat connection(const std::vector<Set>& g) {
    const std::size_t n = g.size();
    IntMat l(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) l[i][j] = meets(g[i], g[j]) ? 1 : 0;
    return l;
}

// Determinant by cofactor expansion (n <= 8).
inline Big cofactor_det(const IntMat& a) {
    const std::size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Big d = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (a[0][j] == 0) continue;
        IntMat m;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<std::int64_t> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(a[i][k]);
            m.push_back(row);
        }
        const Big sub = cofactor_det(m);
        d += (j % 2 == 0 ? 1 : -1) * a[0][j] * sub;
    }
    return d;
}

// Gaussian elimination over the rationals: determinant, rank, inverse.
inline Q rational_det(const IntMat& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Q>> m(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
    Q d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (m[r][c] == 0) continue;
            const Q f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

inline int rational_rank(std::vector<std::vector<Q>> m) {
    int rank = 0;
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows); ++c) {
        std::size_t p = rank;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == static_cast<std::size_t>(rank) || m[r][c] == 0) continue;
            const Q f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

inline std::vector<std::vector<Q>> rational_inverse(const IntMat& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Q>> m(n, std::vector<Q>(2 * n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = a[i][j];
        m[i][n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (m[p][c] == 0) ++p;
        std::swap(m[p], m[c]);
        const Q piv = m[c][c];
        for (auto& x : m[c]) x /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || m[r][c] == 0) continue;
            const Q f = m[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) m[r][k] -= f * m[c][k];
        }
    }
    std::vector<std::vector<Q>> inv(n, std::vector<Q>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

// Faddeev-LeVerrier: det(xI - A) = sum_k c_k x^(n-k).
inline std::vector<Q> leverrier(const IntMat& a) {
    const std::size_t n = a.size();
    std::vector<std::vector<Q>> am(n, std::vector<Q>(n)), m(n, std::vector<Q>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) am[i][j] = a[i][j];
    std::vector<Q> c(n + 1, 0);
    c[0] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // M_k = A M_{k-1} + c_{k-1} I
        std::vector<std::vector<Q>> next(n, std::vector<Q>(n, 0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Q s = 0;
                for (std::size_t l = 0; l < n; ++l) s += am[i][l] * m[l][j];
                next[i][j] = s + (i == j ? c[k - 1] : Q(0));
            }
        m = next;
        Q tr = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l) tr += am[i][l] * m[l][i];
        c[k] = -tr / Q(static_cast<long>(k));
    }
    return c;
}

// Betti numbers from rational ranks of the simplicial boundary maps.
inline std::vector<std::int64_t> betti(const std::vector<Set>& g) {
    const auto f = fvector(g);
    const int r = static_cast<int>(f.size());
    std::map<Set, int> pos;
    std::vector<std::vector<Set>> by_dim(r);
    for (const Set& s : g) {
        pos[s] = static_cast<int>(by_dim[s.size() - 1].size());
        by_dim[s.size() - 1].push_back(s);
    }
    std::vector<int> rk(r, 0);
    for (int k = 0; k + 1 < r; ++k) {
        std::vector<std::vector<Q>> m(by_dim[k + 1].size(), std::vector<Q>(by_dim[k].size(), 0));
        for (std::size_t i = 0; i < by_dim[k + 1].size(); ++i) {
            const Set& y = by_dim[k + 1][i];
            for (std::size_t j = 0; j < y.size(); ++j) {
                Set face = y;
                face.erase(face.begin() + j);
                m[i][pos.at(face)] = (j % 2 == 0) ? 1 : -1;
            }
        }
        rk[k] = rational_rank(m);
    }
    std::vector<std::int64_t> b(r);
    for (int k = 0; k < r; ++k) b[k] = f[k] - rk[k] - (k > 0 ? rk[k - 1] : 0);
    return b;
}

// Cliques of a graph given by adjacency matrix, by subset enumeration.
inline std::vector<Set> cliques(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
    std::vector<Set> out;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        Set s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i);
        bool ok = true;
        for (std::size_t a = 0; a < s.size() && ok; ++a)
            for (std::size_t b = a + 1; b < s.size() && ok; ++b) ok = adj[s[a]][s[b]];
        if (ok) out.push_back(s);
    }
    return ordered(std::set<Set>(out.begin(), out.end()));
}

// f-vector of the order complex: chains of strict inclusions.
inline std::vector<std::int64_t> chain_fvector(const std::vector<Set>& g) {
    const std::size_t n = g.size();
    std::vector<std::int64_t> f;
    std::function<void(std::size_t, int)> rec = [&](std::size_t last, int len) {
        if (f.size() < static_cast<std::size_t>(len)) f.resize(len, 0);
        ++f[len - 1];
        for (std::size_t j = 0; j < n; ++j)
            if (g[j].size() > g[last].size() && subset(g[last], g[j])) rec(j, len + 1);
    };
    for (std::size_t i = 0; i < n; ++i) rec(i, 1);
    return f;
}

inline Big stirling2(int n, int k) {
    std::vector<std::vector<Big>> s(n + 1, std::vector<Big>(k + 1, 0));
    s[0][0] = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= std::min(i, k); ++j) s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
    return s[n][k];
}

// Union-find helper for forests.
struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

// Rooted spanning forests (one root per tree) over all acyclic edge subsets,
// and rooted spanning trees of each connected component combined.
inline std::pair<Big, Big> rooted_counts(int n, const std::vector<std::pair<int, int>>& edges) {
    const int m = static_cast<int>(edges.size());
    Big forests = 0;
    // Components of the full graph, for spanning trees.
    Dsu full(n);
    for (auto [u, v] : edges) full.unite(u, v);
    int components = 0;
    for (int v = 0; v < n; ++v)
        if (full.find(v) == v) ++components;
    Big spanning = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        Dsu d(n);
        bool acyclic = true;
        int used = 0;
        for (int e = 0; e < m && acyclic; ++e)
            if (mask & (1u << e)) {
                acyclic = d.unite(edges[e].first, edges[e].second);
                ++used;
            }
        if (!acyclic) continue;
        std::map<int, int> size;
        for (int v = 0; v < n; ++v) ++size[d.find(v)];
        Big roots = 1;
        for (auto& [r, s] : size) roots *= s;
        forests += roots;
        if (used == n - components) spanning += roots;
    }
    return {spanning, forests};
}

}  // namespace oracle

#include "simplexion/complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "simplexion/errors.hpp"

namespace simplexion {
namespace {

constexpr int kMaxSubsetEnumeration = 24;

// Calls visit(index) for every nonempty subset of y present in g (y included).
template <class Visit>
void for_each_subface(const Complex& g, const Simplex& y, Visit&& visit) {
    const int k = y.size();
    if (k > kMaxSubsetEnumeration) throw ResourceError("simplex too large for subset enumeration");
    std::vector<int> sub;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        sub.clear();
        for (int j = 0; j < k; ++j)
            if (mask & (1u << j)) sub.push_back(y[j]);
        int idx = g.index_of(Simplex::from_sorted(sub));
        if (idx < 0) throw InternalError("complex is not downward closed");
        visit(idx, mask == (1u << k) - 1);
    }
}

}  // namespace

Complex Complex::close(const std::vector<std::vector<int>>& sets) {
    std::vector<Simplex> s;
    s.reserve(sets.size());
    for (const auto& v : sets) s.emplace_back(v);
    return close(s);
}

Complex Complex::close(const std::vector<Simplex>& sets) {
    int maxsize = 0;
    for (const auto& s : sets) {
        if (s.size() == 0) throw InvalidInput("close: empty set in input");
        maxsize = std::max(maxsize, s.size());
    }
    std::vector<std::vector<Simplex>> level(maxsize + 1);
    for (const auto& s : sets) level[s.size()].push_back(s);
    std::unordered_set<Simplex, SimplexHash> seen;
    std::vector<Simplex> all;
    for (int k = maxsize; k >= 1; --k) {
        for (const Simplex& s : level[k]) {
            if (!seen.insert(s).second) continue;
            all.push_back(s);
            if (k > 1)
                for (int j = 0; j < k; ++j) level[k - 1].push_back(s.without(j));
        }
        level[k].clear();
        level[k].shrink_to_fit();
    }
    return from_closed(std::move(all));
}

Complex Complex::from_closed(std::vector<Simplex> simplices) {
    Complex c;
    std::sort(simplices.begin(), simplices.end());
    simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
    c.s_ = std::move(simplices);
    c.index_.reserve(c.s_.size());
    for (int i = 0; i < c.size(); ++i) {
        c.index_.emplace(c.s_[i], i);
        if (c.s_[i].size() == 1) c.vertices_.push_back(c.s_[i][0]);
    }
    return c;
}

int Complex::index_of(const Simplex& x) const {
    auto it = index_.find(x);
    return it == index_.end() ? -1 : it->second;
}

int Complex::require(const Simplex& x) const {
    int i = index_of(x);
    if (i < 0) throw NotFound("simplex " + to_string(x) + " is not in the complex");
    return i;
}

std::vector<Simplex> Complex::facets() const {
    std::vector<char> covered(s_.size(), 0);
    for (const Simplex& y : s_)
        if (y.size() > 1)
            for (int j = 0; j < y.size(); ++j) covered[index_of(y.without(j))] = 1;
    std::vector<Simplex> f;
    for (int i = 0; i < size(); ++i)
        if (!covered[i]) f.push_back(s_[i]);
    std::sort(f.begin(), f.end(), [](const Simplex& a, const Simplex& b) { return a.vertices() < b.vertices(); });
    return f;
}

FaceLattice face_lattice(const Complex& g) {
    FaceLattice fl;
    fl.faces.resize(g.size());
    fl.cofaces.resize(g.size());
    for (int i = 0; i < g.size(); ++i) {
        const Simplex& y = g[i];
        if (y.size() == 1) continue;
        for (int j = 0; j < y.size(); ++j) {
            int f = g.index_of(y.without(j));
            fl.faces[i].push_back(f);
            fl.cofaces[f].push_back(i);
        }
    }
    return fl;
}

std::vector<std::vector<int>> up_sets(const Complex& g) {
    std::vector<std::vector<int>> up(g.size());
    for (int i = 0; i < g.size(); ++i)
        for_each_subface(g, g[i], [&](int s, bool whole) {
            if (!whole) up[s].push_back(i);
        });
    return up;
}

FVector f_vector(const Complex& g) {
    FVector f(g.dim() + 1, 0);
    for (const Simplex& s : g.simplices()) ++f[s.dim()];
    return f;
}

std::int64_t euler_characteristic(const Complex& g) {
    std::int64_t chi = 0;
    for (const Simplex& s : g.simplices()) chi += omega(s.dim());
    return chi;
}

std::vector<std::int64_t> generating_function(const Complex& g) {
    std::vector<std::int64_t> p{1};
    for (std::int64_t v : f_vector(g)) p.push_back(v);
    return p;
}

std::vector<std::int64_t> star_chi(const Complex& g) {
    std::vector<std::int64_t> sigma(g.size(), 0);
    for (int i = 0; i < g.size(); ++i) {
        const int w = omega(g[i].dim());
        for_each_subface(g, g[i], [&](int s, bool) { sigma[s] += w; });
    }
    return sigma;
}

BigInt wu_characteristic(const Complex& g, int k) {
    if (k < 1) throw InvalidInput("wu_characteristic: k must be at least 1");
    // Inclusion-exclusion over the common face s of the tuple.
    std::vector<std::int64_t> sigma = star_chi(g);
    BigInt total = 0;
    for (int i = 0; i < g.size(); ++i) {
        BigInt term = boost::multiprecision::pow(BigInt(sigma[i]), static_cast<unsigned>(k));
        if (omega(g[i].dim()) == 1) total += term;
        else total -= term;
    }
    return total;
}

Complex order_complex(int n, const std::vector<std::vector<int>>& up) {
    std::vector<Simplex> chains;
    std::vector<int> chain;
    std::function<void(int)> dfs = [&](int x) {
        chain.push_back(x);
        std::vector<int> sorted = chain;
        std::sort(sorted.begin(), sorted.end());
        chains.push_back(Simplex::from_sorted(std::move(sorted)));
        for (int y : up[x]) dfs(y);
        chain.pop_back();
    };
    for (int x = 0; x < n; ++x) dfs(x);
    return Complex::from_closed(std::move(chains));
}

std::vector<Simplex> star_up(const Complex& g, const Simplex& x) {
    g.require(x);
    std::vector<Simplex> out;
    for (const Simplex& y : g.simplices())
        if (x.subset_of(y)) out.push_back(y);
    return out;
}

Complex star_down(const Complex& g, const Simplex& x) {
    g.require(x);
    return Complex::close(std::vector<Simplex>{x});
}

Complex unit_sphere(const Complex& g, const Simplex& x) {
    const int xi = g.require(x);
    std::vector<int> members;
    for_each_subface(g, x, [&](int s, bool whole) {
        if (!whole) members.push_back(s);
    });
    for (int i = 0; i < g.size(); ++i)
        if (i != xi && g[i].size() > x.size() && x.subset_of(g[i])) members.push_back(i);
    std::sort(members.begin(), members.end());
    const int m = static_cast<int>(members.size());
    std::vector<std::vector<int>> up(m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (g[members[a]].size() < g[members[b]].size() && g[members[a]].subset_of(g[members[b]]))
                up[a].push_back(b);
    Complex local = order_complex(m, up);
    std::vector<Simplex> mapped;
    mapped.reserve(local.size());
    for (const Simplex& s : local.simplices()) {
        std::vector<int> v;
        for (int a : s) v.push_back(members[a]);
        mapped.push_back(Simplex::from_sorted(std::move(v)));
    }
    return Complex::from_closed(std::move(mapped));
}

namespace {

int vertex_offset(const Complex& g) { return g.empty() ? 0 : g.vertices().back() + 1; }

std::unordered_map<int, int> shift_map(const Complex& h, int offset) {
    std::unordered_map<int, int> m;
    for (int v : h.vertices()) m.emplace(v, v + offset);
    return m;
}

Simplex shifted(const Simplex& s, int offset) {
    std::vector<int> v(s.begin(), s.end());
    for (int& x : v) x += offset;
    return Simplex::from_sorted(std::move(v));
}

}  // namespace

Relabeled join(const Complex& g, const Complex& h) {
    const int off = vertex_offset(g);
    std::vector<Simplex> all = g.simplices();
    std::vector<Simplex> hs;
    for (const Simplex& y : h.simplices()) hs.push_back(shifted(y, off));
    all.insert(all.end(), hs.begin(), hs.end());
    for (const Simplex& x : g.simplices())
        for (const Simplex& y : hs) all.push_back(set_union(x, y));
    return {Complex::from_closed(std::move(all)), shift_map(h, off)};
}

Relabeled disjoint_union(const Complex& g, const Complex& h) {
    const int off = vertex_offset(g);
    std::vector<Simplex> all = g.simplices();
    for (const Simplex& y : h.simplices()) all.push_back(shifted(y, off));
    return {Complex::from_closed(std::move(all)), shift_map(h, off)};
}

Graph skeleton(const Complex& g) {
    const auto& vs = g.vertices();
    std::vector<std::pair<int, int>> edges;
    for (const Simplex& s : g.simplices()) {
        if (s.size() != 2) continue;
        int a = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), s[0]) - vs.begin());
        int b = static_cast<int>(std::lower_bound(vs.begin(), vs.end(), s[1]) - vs.begin());
        edges.emplace_back(a, b);
    }
    return Graph::from_edges(static_cast<int>(vs.size()), edges);
}

bool is_flag(const Complex& g) {
    std::int64_t total = 0, limit = g.size();
    bool over = false;
    Graph sk = skeleton(g);
    std::vector<int> all(sk.n);
    std::iota(all.begin(), all.end(), 0);
    // Every simplex of G is a clique of its skeleton, so equality of counts
    // is equivalent to G being flag.
    for (std::int64_t c : clique_counts(sk, all)) {
        total += c;
        if (total > limit) over = true;
    }
    return !over && total == limit;
}

Graph refinement_graph(const Complex& g) {
    std::vector<std::vector<int>> up = up_sets(g);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < g.size(); ++i)
        for (int j : up[i]) edges.emplace_back(i, j);
    return Graph::from_edges(g.size(), edges);
}

Carrier carrier(const Complex& g) {
    if (is_flag(g)) return {skeleton(g), true};
    return {refinement_graph(g), false};
}

Rational inductive_dimension(const Complex& g) {
    if (g.empty()) return Rational(-1);
    return inductive_dimension(carrier(g).graph);
}

}  // namespace simplexion

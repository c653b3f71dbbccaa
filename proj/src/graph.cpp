#include "simplexion/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <boost/dynamic_bitset.hpp>

#include "simplexion/errors.hpp"

namespace simplexion {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InvalidInput("graph: negative vertex count");
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) throw InvalidInput("graph: edge endpoint out of range");
        if (u == v) throw InvalidInput("graph: self-loop");
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) {
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end()) throw InvalidInput("graph: duplicate edge");
    }
    return g;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) e.emplace_back(u, v);
    return e;
}

std::size_t Graph::edge_count() const {
    std::size_t m = 0;
    for (const auto& a : adj) m += a.size();
    return m / 2;
}

bool Graph::has_edge(int u, int v) const { return std::binary_search(adj[u].begin(), adj[u].end(), v); }

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::vector<char> seen(g.n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.n;
}

std::vector<int> neighbours_in(const Graph& g, int v, const std::vector<int>& subset) {
    std::vector<int> out;
    std::set_intersection(g.adj[v].begin(), g.adj[v].end(), subset.begin(), subset.end(), std::back_inserter(out));
    return out;
}

namespace {

using Bits = boost::dynamic_bitset<>;

struct LocalGraph {
    std::vector<Bits> later;  // neighbours with larger local index
};

LocalGraph localise(const Graph& g, const std::vector<int>& subset) {
    const std::size_t m = subset.size();
    LocalGraph lg;
    lg.later.assign(m, Bits(m));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& a = g.adj[subset[i]];
        std::size_t j = i + 1;
        for (auto it = std::upper_bound(a.begin(), a.end(), subset[i]); it != a.end() && j < m;) {
            if (*it == subset[j]) {
                lg.later[i].set(j);
                ++it;
                ++j;
            } else if (*it < subset[j]) {
                ++it;
            } else {
                ++j;
            }
        }
    }
    return lg;
}

template <class Visit>
void extend(const LocalGraph& lg, std::vector<int>& clique, const Bits& cand, Visit& visit) {
    for (auto j = cand.find_first(); j != Bits::npos; j = cand.find_next(j)) {
        clique.push_back(static_cast<int>(j));
        visit(clique);
        Bits next = cand & lg.later[j];
        if (next.any()) extend(lg, clique, next, visit);
        clique.pop_back();
    }
}

template <class Visit>
void cliques_local(const Graph& g, const std::vector<int>& subset, Visit&& visit) {
    LocalGraph lg = localise(g, subset);
    std::vector<int> clique;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        clique.assign(1, static_cast<int>(i));
        visit(clique);
        if (lg.later[i].any()) extend(lg, clique, lg.later[i], visit);
    }
}

}  // namespace

void for_each_clique(const Graph& g, const std::vector<int>& subset,
                     const std::function<void(const std::vector<int>&)>& visit) {
    std::vector<int> mapped;
    cliques_local(g, subset, [&](const std::vector<int>& c) {
        mapped.resize(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) mapped[i] = subset[c[i]];
        visit(mapped);
    });
}

std::vector<std::int64_t> clique_counts(const Graph& g, const std::vector<int>& subset) {
    std::vector<std::int64_t> counts;
    cliques_local(g, subset, [&](const std::vector<int>& c) {
        if (counts.size() < c.size()) counts.resize(c.size(), 0);
        ++counts[c.size() - 1];
    });
    return counts;
}

std::vector<std::int64_t> clique_counts(const Graph& g) {
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    return clique_counts(g, all);
}

std::int64_t whitney_euler(const Graph& g, const std::vector<int>& subset) {
    std::int64_t chi = 0;
    cliques_local(g, subset, [&](const std::vector<int>& c) { chi += (c.size() % 2 == 1) ? 1 : -1; });
    return chi;
}

Rational inductive_dimension(const Graph& g) {
    std::map<std::vector<int>, Rational> memo;
    std::function<Rational(const std::vector<int>&)> rec = [&](const std::vector<int>& w) -> Rational {
        if (w.empty()) return Rational(-1);
        if (w.size() == 1) return Rational(0);
        auto it = memo.find(w);
        if (it != memo.end()) return it->second;
        Rational sum = 0;
        for (int v : w) sum += rec(neighbours_in(g, v, w));
        Rational d = 1 + sum / static_cast<long>(w.size());
        memo.emplace(w, d);
        return d;
    };
    std::vector<int> all(g.n);
    std::iota(all.begin(), all.end(), 0);
    return rec(all);
}

}  // namespace simplexion

#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "simplexion/number.hpp"

namespace simplexion {

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;

    Graph() = default;
    explicit Graph(int n_) : n(n_), adj(n_) {}
    // Rejects self-loops, duplicates and out-of-range endpoints.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    std::vector<std::pair<int, int>> edges() const;
    std::size_t edge_count() const;
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }

    friend bool operator==(const Graph&, const Graph&) = default;
};

bool is_connected(const Graph& g);

// Calls visit(clique) for every nonempty clique of the subgraph induced on
// the sorted vertex list `subset`; cliques are reported as increasing lists.
void for_each_clique(const Graph& g, const std::vector<int>& subset,
                     const std::function<void(const std::vector<int>&)>& visit);
// Number of cliques by size: result[k] = number of (k+1)-cliques.
std::vector<std::int64_t> clique_counts(const Graph& g, const std::vector<int>& subset);
std::vector<std::int64_t> clique_counts(const Graph& g);
// Euler characteristic of the Whitney complex on `subset`.
std::int64_t whitney_euler(const Graph& g, const std::vector<int>& subset);

// Neighbours of v inside a sorted vertex subset.
std::vector<int> neighbours_in(const Graph& g, int v, const std::vector<int>& sorted_subset);

// Inductive dimension of the Whitney complex: -1 when empty, otherwise
// 1 + average of the dimensions of the unit spheres.
Rational inductive_dimension(const Graph& g);

}  // namespace simplexion

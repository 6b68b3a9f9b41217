#pragma once

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace itree {

// Immutable simple undirected graph on vertices 0..n-1, dense ids,
// sorted adjacency lists. Built once, then queried.
class Graph {
public:
    Graph() = default;

    // Deduplicates edges, rejects loops and out-of-range endpoints.
    static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    long long m() const { return m_; }

    std::span<const int> neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;

    // All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edge_list() const;

private:
    std::vector<std::vector<int>> adj_;
    long long m_ = 0;
};

struct LevelDecomposition {
    int root = 0;
    std::vector<std::vector<int>> levels;  // levels[0] == {root}, each sorted
    std::vector<int> level_of;             // -1 for vertices unreachable from root
    std::vector<int> unreachable;          // sorted
};

LevelDecomposition bfs_levels(const Graph& g, int root);

bool is_connected(const Graph& g);
bool is_triangle_free(const Graph& g);
bool is_bipartite(const Graph& g);

// Two-coloring if one exists: color[v] in {0, 1}, color 0 for the class of
// the lowest vertex in each component.
std::optional<std::vector<int>> bipartition(const Graph& g);

// Subset predicates. S may be unsorted; duplicates are tolerated.
bool is_forest(const Graph& g, const std::vector<int>& subset);
bool is_induced_tree(const Graph& g, const std::vector<int>& subset);
long long induced_edge_count(const Graph& g, const std::vector<int>& subset);

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;  // new id -> original id, ascending
};

// Vertices of S keep their relative order, so new id i maps to the i-th
// smallest member of S.
InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& subset);

int max_degree(const Graph& g);

// Greedy independent subset of S: scan ascending, keep a vertex unless an
// already-kept neighbor exists. Output sorted. Size is at least
// |S| / (d+1) where d bounds degrees inside S.
std::vector<int> greedy_independent_set(const Graph& g, const std::vector<int>& subset);

// Text edge-list format: first line "n m", then m lines "u v".
Graph read_edge_list(std::istream& in);
std::string write_edge_list(const Graph& g);

}  // namespace itree

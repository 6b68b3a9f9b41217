#pragma once

#include <cstdint>
#include <vector>

#include "itree/graph.hpp"

namespace itree {

struct LeveledGraph {
    Graph graph;
    std::vector<std::vector<int>> levels;
};

// Path of bicliques with parameter k >= 1: levels indexed i = -(k-1)..k-1
// holding k-|i| vertices each, consecutive levels completely joined.
// k*k vertices total; vertex ids run level by level from the -(k-1) end,
// ascending inside a level. Largest induced tree has exactly 2k-1 vertices.
LeveledGraph path_of_bicliques(int k);

// Connected n-vertex member of the same family: start from k = ceil(sqrt(n))
// and repeatedly drop the highest-id vertex of a currently largest level
// (leftmost largest on ties), never emptying a level. Vertices are then
// relabeled contiguously in the original order.
LeveledGraph path_of_bicliques_subgraph(int n);

struct BlowUpSpec {
    Graph base;
    std::vector<int> ports;  // w_0..w_r: w_0 receives the upward edge
    int depth = 0;           // l: copies live at tree depths 0..l
};

struct BlowUpResult {
    Graph graph;
    int copy_count = 0;
    int copy_size = 0;
    // Per copy, in BFS order of the r-ary tree (copy 0 is the root):
    std::vector<int> tree_parent;     // -1 for the root copy
    std::vector<int> tree_son_index;  // 1..r, 0 for the root copy
};

// Complete r-ary tree of copies of the base, r = ports.size()-1 sons per
// node, depths 0..l. Copy c occupies ids [c*nb, (c+1)*nb). The i-th son
// of a copy links its port w_0 to the parent's port w_i by a single edge.
// Preserves triangle-freeness and bipartiteness of the base.
// Throws if the result would exceed vertex_cap.
BlowUpResult blow_up(const BlowUpSpec& spec, long long vertex_cap = 2000000);

// Random attachment tree plus up to edge_budget extra edges, each rejected
// if it would close a triangle. Connected by construction.
Graph random_connected_triangle_free(int n, long long extra_edge_budget, std::uint64_t seed);

// Random two-colored attachment tree plus extra edges rejected across the
// same color class. Connected and bipartite by construction.
Graph random_connected_bipartite(int n, long long extra_edge_budget, std::uint64_t seed);

}  // namespace itree

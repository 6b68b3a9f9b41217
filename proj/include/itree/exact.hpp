#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "itree/graph.hpp"

namespace itree {

struct ExactResult {
    long long value = 0;
    std::vector<int> witness;  // sorted
    std::uint64_t nodes_explored = 0;
    bool exhausted = true;  // false when the node budget cut the search
};

// Branch and bound for the largest induced tree. Anchored enumeration:
// for each anchor a in ascending order, grow connected sets above a by
// repeatedly deciding the lowest free vertex with exactly one neighbor
// inside (two or more would close a cycle, and can never drop back to
// one). Visits each induced tree exactly once. Bound: current size plus
// the free vertices reachable through candidates.
ExactResult max_induced_tree(const Graph& g, std::uint64_t node_budget = 50000000);

// All-subsets reference, n <= 20. Independent of the search above: masks
// ascending, explicit connectivity and edge-count test per subset.
ExactResult max_induced_tree_naive(const Graph& g);

// Branch and bound for the independence number, n <= 40.
ExactResult independence_number(const Graph& g, std::uint64_t node_budget = 50000000);

// Calls fn for every nonempty induced tree, each exactly once, vertices
// sorted. Throws std::runtime_error if the node budget is hit, so a
// completed call is a proof of exhaustiveness. Desk scale only.
void for_each_induced_tree(const Graph& g, std::uint64_t node_budget,
                           const std::function<void(const std::vector<int>&)>& fn);

// Over all induced trees T that grow upward through the given levels
// (every vertex of T above T's lowest occupied level has exactly one
// T-neighbor one level down and none in its own level), the maximum
// number of T-vertices in the topmost level of the decomposition.
// Requires levels covering all of g. n <= 20.
ExactResult max_up_growing_top_count(const Graph& g, const LevelDecomposition& levels,
                                     std::uint64_t node_budget = 50000000);

enum class GraphClass { TriangleFree, Bipartite };

std::string graph_class_name(GraphClass c);

struct FSearchResult {
    int n = 0;
    GraphClass cls = GraphClass::TriangleFree;
    long long value = 0;                     // min over the family of t(G)
    std::vector<std::string> argmin_graphs;  // graph6, capped, input order
    std::string source;                      // "native" or "stream"
    std::uint64_t graphs_considered = 0;
    std::uint64_t graphs_skipped = 0;  // stream graphs outside the family
};

// Exhaustive minimum of t(G) over connected members of the class on n
// labeled vertices. Native edge-set backtracking with class pruning,
// n <= 8, no isomorphism reduction.
FSearchResult f_search_native(int n, GraphClass cls, std::size_t witness_cap = 100);

struct StreamIssue {
    long long line = 0;
    std::string message;
};

// Same minimum over a graph6 stream, one graph per line. Malformed lines
// are fatal when strict, otherwise collected into issues and skipped.
// Connected order-n members of the class are scored; other graphs are
// counted as skipped (n == 0 adopts the first parsed graph's order). A
// search hitting the node budget is an error: a partial bound must not
// masquerade as the minimum. jobs > 1 splits the scoring across threads;
// results do not depend on jobs.
FSearchResult f_search_stream(std::istream& in, int n, GraphClass cls, int jobs, bool strict,
                              std::vector<StreamIssue>& issues,
                              std::uint64_t node_budget = 50000000,
                              std::size_t witness_cap = 100);

}  // namespace itree

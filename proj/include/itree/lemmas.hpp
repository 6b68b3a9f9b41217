#pragma once

#include <string>
#include <utility>
#include <vector>

#include "itree/graph.hpp"
#include "itree/ratio.hpp"

namespace itree {

// Two-layer incidence structure the selection engine runs on. top_adj[a]
// holds b-indices, bottom_adj[b] holds a-indices, both sorted. The two
// index spaces are independent.
struct Bigraph {
    std::vector<std::vector<int>> top_adj;
    std::vector<std::vector<int>> bottom_adj;

    int top_size() const { return static_cast<int>(top_adj.size()); }
    int bottom_size() const { return static_cast<int>(bottom_adj.size()); }
    int max_deg() const;

    static Bigraph from_edges(int top_size, int bottom_size,
                              const std::vector<std::pair<int, int>>& edges);
};

// Two disjoint vertex sets of a host graph viewed as layers; edges are the
// host edges between them.
struct BipartiteView {
    const Graph* base = nullptr;
    std::vector<int> top;     // sorted
    std::vector<int> bottom;  // sorted

    // Validates range, disjointness; sorts and deduplicates.
    static BipartiteView make(const Graph& g, std::vector<int> top, std::vector<int> bottom);
    Bigraph project() const;  // indices follow positions in top/bottom
};

enum class OutcomeTag { Matching, BranchingUpForest, IndependentSet, InducedMatching };

std::string outcome_tag_name(OutcomeTag tag);

// Forest growing upward from its bottom layer: every top vertex has degree
// exactly 1, every bottom vertex degree >= 1.
struct UpForest {
    std::vector<int> top;                   // sorted
    std::vector<int> bottom;                // sorted
    std::vector<std::pair<int, int>> edges; // (top, bottom), lexicographic
};

struct SelectionStats {
    long long top_size = 0;
    long long bottom_size = 0;
    long long subset_size = 0;  // split input size, unused by selection
    int delta = 0;              // max degree of the structure examined
    Ratio eta;
    long long achieved = 0;     // matched edges, stars, survivors, or pairs
};

struct SelectionOutcome {
    OutcomeTag tag = OutcomeTag::Matching;
    UpForest forest;                          // Matching / BranchingUpForest
    std::vector<int> vertices;                // IndependentSet, sorted
    std::vector<std::pair<int, int>> edges;   // InducedMatching, (u,v) u<v, sorted
    SelectionStats stats;
};

// Every top vertex must have a bottom neighbor. Returns either a Matching
// with at least (1-eta)*|top| edges, built from bottom vertices of degree
// exactly 1, or a BranchingUpForest of disjoint stars (center a bottom
// vertex of degree >= 2 together with all of its top neighbors) with at
// least eta*|top|/delta^3 stars. Star centers are chosen lowest-index
// first; each chosen star retires every bottom vertex within distance two.
SelectionOutcome select_up_forest(const Bigraph& h, Ratio eta);

// Same engine on a host-graph view; all ids in the outcome are host ids.
SelectionOutcome select_up_forest(const BipartiteView& view, Ratio eta);

// Greedy edge deletion on the induced subgraph G[S]: take the
// lexicographically smallest remaining edge, remove both endpoints and
// all their remaining neighbors, repeat. Survivors R form an independent
// set; the taken edges form an induced matching. Returns IndependentSet R
// when |R| >= (1-eta)*|S| and R is nonempty (or S is empty), else the
// InducedMatching, which then has at least eta*|S|/(2*delta) edges.
SelectionOutcome split_is_or_im(const Graph& g, const std::vector<int>& subset, Ratio eta);

struct CheckResult {
    bool ok = true;
    std::vector<std::string> issues;

    void fail(std::string msg) {
        ok = false;
        issues.push_back(std::move(msg));
    }
};

// Post-condition checkers. They recompute every claim from the host graph
// and never reuse intermediate state of the constructions.
CheckResult verify_selection(const BipartiteView& view, Ratio eta, const SelectionOutcome& out);
CheckResult verify_selection(const Bigraph& h, Ratio eta, const SelectionOutcome& out);
CheckResult verify_split(const Graph& g, const std::vector<int>& subset, Ratio eta,
                         const SelectionOutcome& out);

}  // namespace itree

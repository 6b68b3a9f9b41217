#pragma once

#include <optional>
#include <string>
#include <vector>

#include "itree/graph.hpp"
#include "itree/lemmas.hpp"

namespace itree {

// ceil(exp(c * sqrt(ln n))), clamped below at 2. Deliberately small for
// every graph anyone can hold in memory; the point of the machinery is
// that it is positive and unbounded in n.
long long default_target_size(long long n, double c = 0.3);

enum class StepKind { Matching, Branching, Double };

std::string step_kind_name(StepKind kind);

struct StepRecord {
    StepKind kind = StepKind::Matching;
    int from_level = 0;
    int to_level = 0;
    long long size_before = 0;
    long long size_after = 0;
    // Intermediate set sizes, -1 where a step kind has none. For Matching
    // and Branching, m_prime is the selected bottom side before thinning.
    // For Double, m_prime is the matched bottom side, im_pairs the induced
    // matching size, m_prime2 the contracted selection's bottom side.
    long long m_prime = -1;
    long long m_prime2 = -1;
    long long im_pairs = -1;
    std::vector<std::string> lemma_tags;
};

struct ExtractionTrace {
    long long t = 0;
    int root = 0;
    long long n = 0;
    int k = 0;    // starting level
    int ell = 0;  // final level
    std::vector<StepRecord> steps;
    // (level, M_level), ascending by level, every set sorted and nonempty.
    std::vector<std::pair<int, std::vector<int>>> level_sets;
};

enum class Provenance { Star, InducedPath, LevelConstruction };

std::string provenance_name(Provenance p);

struct TreeCertificate {
    std::vector<int> vertices;  // sorted
    Provenance provenance = Provenance::LevelConstruction;
};

struct ExtractionResult {
    TreeCertificate certificate;
    std::optional<ExtractionTrace> trace;  // LevelConstruction only
    std::string note;
};

// Requires g connected and bipartite, t >= 3, root valid. Early exits: a
// vertex of degree >= t-1 yields a star; a vertex at BFS depth t yields a
// shortest path (induced by minimality). Otherwise runs the level descent:
// M_k = L_k for the lowest k with t*|L_k| >= n, one selection per level,
// certificate is the forest component of the final singleton.
ExtractionResult extract_bipartite(const Graph& g, long long t, int root = 0);

// Triangle-free variant. Differences: M_k and every branching output pass
// through greedy_independent_set, a Matching selection is followed by the
// split of the matched side, and an InducedMatching there triggers a
// two-level contracted descent (eta = 1/2) whose fan-out doubles the
// component like a branching step does.
ExtractionResult extract_triangle_free(const Graph& g, long long t, int root = 0);

// Recomputes everything the certificate and trace claim: tree-ness, sizes,
// provenance-specific lower bounds, per-step exact rational inequalities,
// level-set structure, forest shape of the union, and 2^b growth where b
// counts Branching plus Double steps. Never consults extractor internals.
CheckResult verify_extraction(const Graph& g, long long t, int root, bool bipartite_mode,
                              const ExtractionResult& result);

}  // namespace itree

#pragma once

// Reference implementations for tests, written against adjacency matrices
// with a different construction than the library so the two sides can
// disagree.

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace oracles {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Matrix adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (auto [u, v] : edges) {
        adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
        adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    return adj;
}

// graph6 assembled as an explicit 0/1 string first, chunked afterwards.
inline std::string graph6_reference(int n, const Matrix& adj) {
    std::string bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row)
            bits.push_back(adj[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]
                               ? '1'
                               : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
    }
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (std::size_t j = 0; j < 6; ++j) v = v * 2 + (bits[i + j] == '1');
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    // false when x and y were already joined
    bool unite(int x, int y) {
        x = find(x);
        y = find(y);
        if (x == y) return false;
        parent[static_cast<std::size_t>(x)] = y;
        return true;
    }
};

// connected and acyclic on the induced subgraph, via union-find
inline bool induces_tree(const Matrix& adj, const std::vector<int>& subset) {
    if (subset.empty()) return false;
    const int s = static_cast<int>(subset.size());
    DisjointSets ds(s);
    int merges = 0, edges = 0;
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (adj[static_cast<std::size_t>(subset[static_cast<std::size_t>(i)])]
                   [static_cast<std::size_t>(subset[static_cast<std::size_t>(j)])]) {
                ++edges;
                if (ds.unite(i, j)) ++merges;
            }
    return edges == s - 1 && merges == s - 1;
}

// largest induced tree by scanning all vertex subsets, n <= 16
inline int tree_size_scan(int n, const Matrix& adj) {
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) subset.push_back(v);
        if (static_cast<int>(subset.size()) <= best) continue;
        if (induces_tree(adj, subset)) best = static_cast<int>(subset.size());
    }
    return best;
}

// largest independent set by scanning all vertex subsets, n <= 16
inline int alpha_scan(int n, const Matrix& adj) {
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) subset.push_back(v);
        if (static_cast<int>(subset.size()) <= best) continue;
        bool ok = true;
        for (std::size_t i = 0; i < subset.size() && ok; ++i)
            for (std::size_t j = i + 1; j < subset.size() && ok; ++j)
                ok = !adj[static_cast<std::size_t>(subset[i])]
                         [static_cast<std::size_t>(subset[j])];
        if (ok) best = static_cast<int>(subset.size());
    }
    return best;
}

inline bool triangle_free_matrix(int n, const Matrix& adj) {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                if (adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
                    adj[static_cast<std::size_t>(b)][static_cast<std::size_t>(c)] &&
                    adj[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)])
                    return false;
    return true;
}

inline bool bipartite_matrix(int n, const Matrix& adj) {
    std::vector<int> color(static_cast<std::size_t>(n), -1);
    for (int start = 0; start < n; ++start) {
        if (color[static_cast<std::size_t>(start)] != -1) continue;
        color[static_cast<std::size_t>(start)] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w) {
                if (!adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)]) continue;
                if (color[static_cast<std::size_t>(w)] == -1) {
                    color[static_cast<std::size_t>(w)] =
                        1 - color[static_cast<std::size_t>(v)];
                    stack.push_back(w);
                } else if (color[static_cast<std::size_t>(w)] ==
                           color[static_cast<std::size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

inline bool connected_matrix(int n, const Matrix& adj) {
    if (n == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n));
    std::vector<int> stack{0};
    seen[0] = true;
    int reached = 1;
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] &&
                !seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    return reached == n;
}

// xorshift stream for test corpora, unrelated to the library generator
struct TestRng {
    std::uint64_t s;
    explicit TestRng(std::uint64_t seed) : s(seed * 2654435761ULL + 88172645463325252ULL) {}
    std::uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }
};

// each potential edge kept with probability num/den
inline std::vector<std::pair<int, int>> random_edges(int n, int num, int den, TestRng& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(den) < num) edges.emplace_back(u, v);
    return edges;
}

}  // namespace oracles

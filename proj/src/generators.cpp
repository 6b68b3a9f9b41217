#include "itree/generators.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>

#include "itree/rng.hpp"

namespace itree {

namespace {

LeveledGraph assemble_leveled(const std::vector<int>& sizes) {
    LeveledGraph out;
    std::vector<std::vector<int>> levels;
    int next = 0;
    for (int s : sizes) {
        std::vector<int> level(s);
        for (int& v : level) v = next++;
        levels.push_back(std::move(level));
    }
    std::vector<std::pair<int, int>> edges;
    for (std::size_t j = 0; j + 1 < levels.size(); ++j)
        for (int u : levels[j])
            for (int v : levels[j + 1]) edges.emplace_back(u, v);
    out.graph = Graph::from_edge_list(next, edges);
    out.levels = std::move(levels);
    return out;
}

}  // namespace

LeveledGraph path_of_bicliques(int k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    std::vector<int> sizes;
    for (int j = 0; j < 2 * k - 1; ++j) sizes.push_back(k - std::abs(j - (k - 1)));
    return assemble_leveled(sizes);
}

LeveledGraph path_of_bicliques_subgraph(int n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    int k = 1;
    while (static_cast<long long>(k) * k < n) ++k;
    std::vector<int> sizes;
    for (int j = 0; j < 2 * k - 1; ++j) sizes.push_back(k - std::abs(j - (k - 1)));
    long long excess = static_cast<long long>(k) * k - n;
    while (excess > 0) {
        auto it = std::max_element(sizes.begin(), sizes.end());
        if (*it > 1) {
            --*it;
        } else {
            // All levels are singletons; shortening the path from the far
            // end keeps it connected.
            sizes.pop_back();
        }
        --excess;
    }
    return assemble_leveled(sizes);
}

BlowUpResult blow_up(const BlowUpSpec& spec, long long vertex_cap) {
    const int nb = spec.base.n();
    if (nb == 0) throw std::invalid_argument("blow-up base must be nonempty");
    if (spec.ports.empty()) throw std::invalid_argument("blow-up needs at least the upward port");
    if (spec.depth < 0) throw std::invalid_argument("negative depth");
    {
        std::set<int> seen;
        for (int w : spec.ports) {
            if (w < 0 || w >= nb) throw std::out_of_range("port out of range");
            if (!seen.insert(w).second) throw std::invalid_argument("duplicate port");
        }
    }
    const int r = static_cast<int>(spec.ports.size()) - 1;

    long long copies = 1, width = 1;
    for (int d = 1; d <= spec.depth && r > 0; ++d) {
        if (width > vertex_cap / r) throw std::length_error("blow-up exceeds vertex cap");
        width *= r;
        copies += width;
        if (copies > vertex_cap / nb) throw std::length_error("blow-up exceeds vertex cap");
    }
    if (copies * nb > vertex_cap) throw std::length_error("blow-up exceeds vertex cap");

    BlowUpResult out;
    out.copy_count = static_cast<int>(copies);
    out.copy_size = nb;
    out.tree_parent.assign(out.copy_count, -1);
    out.tree_son_index.assign(out.copy_count, 0);

    const auto base_edges = spec.base.edge_list();
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(copies) * base_edges.size() + copies);
    for (int c = 0; c < out.copy_count; ++c)
        for (auto [u, v] : base_edges) edges.emplace_back(c * nb + u, c * nb + v);

    // Copies in BFS order over the complete r-ary tree of depth l.
    std::deque<std::pair<int, int>> queue{{0, 0}};  // (copy, depth)
    int next_copy = 1;
    while (!queue.empty()) {
        auto [c, d] = queue.front();
        queue.pop_front();
        if (d == spec.depth) continue;
        for (int i = 1; i <= r; ++i) {
            int child = next_copy++;
            out.tree_parent[child] = c;
            out.tree_son_index[child] = i;
            edges.emplace_back(c * nb + spec.ports[i], child * nb + spec.ports[0]);
            queue.emplace_back(child, d + 1);
        }
    }

    out.graph = Graph::from_edge_list(out.copy_count * nb, edges);
    return out;
}

Graph random_connected_triangle_free(int n, long long extra_edge_budget, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Rng rng = Rng(seed).fork(0x7466);
    std::vector<std::set<int>> adj(n);
    auto connect = [&](int u, int v) {
        adj[u].insert(v);
        adj[v].insert(u);
    };
    for (int v = 1; v < n; ++v) connect(static_cast<int>(rng.below(v)), v);
    for (long long i = 0; i < extra_edge_budget; ++i) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v || adj[u].count(v)) continue;
        const auto& small = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
        const auto& large = adj[u].size() <= adj[v].size() ? adj[v] : adj[u];
        bool triangle = false;
        for (int w : small)
            if (large.count(w)) {
                triangle = true;
                break;
            }
        if (!triangle) connect(u, v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

Graph random_connected_bipartite(int n, long long extra_edge_budget, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    Rng rng = Rng(seed).fork(0x6270);
    std::vector<int> color(n, 0);
    if (n > 1) color[1] = 1;
    for (int v = 2; v < n; ++v) color[v] = static_cast<int>(rng.below(2));
    std::vector<std::set<int>> adj(n);
    auto connect = [&](int u, int v) {
        adj[u].insert(v);
        adj[v].insert(u);
    };
    for (int v = 1; v < n; ++v) {
        int p = static_cast<int>(rng.below(v));
        while (color[p] == color[v]) p = static_cast<int>(rng.below(v));
        connect(p, v);
    }
    for (long long i = 0; i < extra_edge_budget; ++i) {
        int u = static_cast<int>(rng.below(n));
        int v = static_cast<int>(rng.below(n));
        if (u == v || color[u] == color[v] || adj[u].count(v)) continue;
        connect(u, v);
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (u < v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

}  // namespace itree

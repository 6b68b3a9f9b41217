#include "itree/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>

namespace itree {

namespace {

std::vector<int> clean_subset(const Graph& g, const std::vector<int>& subset) {
    std::vector<int> s(subset);
    for (int v : s) {
        if (v < 0 || v >= g.n()) throw std::out_of_range("subset vertex out of range");
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

}  // namespace

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n) throw std::out_of_range("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loop edge");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        g.m_ += static_cast<long long>(nb.size());
    }
    g.m_ /= 2;
    return g;
}

bool Graph::has_edge(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

LevelDecomposition bfs_levels(const Graph& g, int root) {
    if (root < 0 || root >= g.n()) throw std::out_of_range("root out of range");
    LevelDecomposition d;
    d.root = root;
    d.level_of.assign(g.n(), -1);
    d.level_of[root] = 0;
    std::vector<int> frontier{root};
    while (!frontier.empty()) {
        d.levels.push_back(frontier);
        std::vector<int> next;
        for (int v : frontier)
            for (int w : g.neighbors(v))
                if (d.level_of[w] < 0) {
                    d.level_of[w] = static_cast<int>(d.levels.size());
                    next.push_back(w);
                }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }
    for (int v = 0; v < g.n(); ++v)
        if (d.level_of[v] < 0) d.unreachable.push_back(v);
    return d;
}

bool is_connected(const Graph& g) {
    if (g.n() == 0) return true;
    return bfs_levels(g, 0).unreachable.empty();
}

bool is_triangle_free(const Graph& g) {
    // For each edge u<v, intersect the sorted lists above v.
    for (int u = 0; u < g.n(); ++u) {
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            auto a = g.neighbors(u), b = g.neighbors(v);
            std::size_t i = 0, j = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) {
                    if (a[i] > v) return false;
                    ++i;
                    ++j;
                } else if (a[i] < b[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
        }
    }
    return true;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(g.n(), -1);
    for (int s = 0; s < g.n(); ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v)) {
                if (color[w] < 0) {
                    color[w] = 1 - color[v];
                    q.push_back(w);
                } else if (color[w] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

long long induced_edge_count(const Graph& g, const std::vector<int>& subset) {
    auto s = clean_subset(g, subset);
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    long long cnt = 0;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && in[w]) ++cnt;
    return cnt;
}

bool is_forest(const Graph& g, const std::vector<int>& subset) {
    auto s = clean_subset(g, subset);
    if (s.empty()) return true;
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    // Forest iff every component has edges = vertices - 1; equivalently no
    // BFS cross edge. Count edges and components instead.
    long long edges = 0;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && in[w]) ++edges;
    std::vector<char> seen(g.n(), 0);
    long long comps = 0;
    for (int v : s) {
        if (seen[v]) continue;
        ++comps;
        std::deque<int> q{v};
        seen[v] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int w : g.neighbors(x))
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
        }
    }
    return edges == static_cast<long long>(s.size()) - comps;
}

bool is_induced_tree(const Graph& g, const std::vector<int>& subset) {
    auto s = clean_subset(g, subset);
    if (s.empty()) return false;
    std::vector<char> in(g.n(), 0);
    for (int v : s) in[v] = 1;
    long long edges = 0;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && in[w]) ++edges;
    if (edges != static_cast<long long>(s.size()) - 1) return false;
    // Connected with |S|-1 edges is a tree.
    std::vector<char> seen(g.n(), 0);
    std::deque<int> q{s[0]};
    seen[s[0]] = 1;
    std::size_t reached = 1;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int w : g.neighbors(x))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push_back(w);
            }
    }
    return reached == s.size();
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& subset) {
    auto s = clean_subset(g, subset);
    std::vector<int> index(g.n(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) index[s[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : s)
        for (int w : g.neighbors(v))
            if (w > v && index[w] >= 0) edges.emplace_back(index[v], index[w]);
    InducedSubgraph out;
    out.graph = Graph::from_edge_list(static_cast<int>(s.size()), edges);
    out.to_original = std::move(s);
    return out;
}

int max_degree(const Graph& g) {
    int d = 0;
    for (int v = 0; v < g.n(); ++v) d = std::max(d, g.degree(v));
    return d;
}

std::vector<int> greedy_independent_set(const Graph& g, const std::vector<int>& subset) {
    auto s = clean_subset(g, subset);
    std::vector<char> kept(g.n(), 0);
    std::vector<int> out;
    for (int v : s) {
        bool blocked = false;
        for (int w : g.neighbors(v))
            if (kept[w]) {
                blocked = true;
                break;
            }
        if (!blocked) {
            kept[v] = 1;
            out.push_back(v);
        }
    }
    return out;
}

Graph read_edge_list(std::istream& in) {
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing header");
    if (n < 0 || m < 0) throw std::invalid_argument("edge list: negative header field");
    if (n > (1LL << 31) - 2) throw std::invalid_argument("edge list: vertex count too large");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v)) throw std::invalid_argument("edge list: truncated edge lines");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge list: endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.n() << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace itree

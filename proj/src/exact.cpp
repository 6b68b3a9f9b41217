#include "itree/exact.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "itree/graph6.hpp"

namespace itree {

namespace {

std::vector<int> sorted_copy(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

// Anchored growth over induced trees. For anchor a only vertices above a
// participate; a set is extended by deciding the lowest free vertex with
// exactly one neighbor inside (a second inside-neighbor would close a
// cycle, and the count never decreases while the set grows). Include-first
// then exclude visits every induced tree with minimum a exactly once.
struct TreeWalk {
    enum Status : signed char { kFree = 0, kInside, kRetired, kSkipped };

    const Graph& g;
    std::uint64_t budget;
    const std::function<void(const std::vector<int>&)>* emit;  // null: maximize
    std::uint64_t nodes = 0;
    bool exhausted = true;
    bool stopped = false;
    std::vector<signed char> status;
    std::vector<int> inside_count;
    std::vector<int> current, best;
    std::vector<int> mark;
    std::vector<int> stack;
    int stamp = 0;

    TreeWalk(const Graph& graph, std::uint64_t node_budget,
             const std::function<void(const std::vector<int>&)>* callback)
        : g(graph), budget(node_budget), emit(callback) {}

    void run() {
        const int n = g.n();
        status.assign(n, kFree);
        inside_count.assign(n, 0);
        mark.assign(n, 0);
        for (int a = 0; a < n && !stopped; ++a) {
            status[a] = kInside;
            current.assign(1, a);
            for (int w : g.neighbors(a)) ++inside_count[w];
            grow();
            for (int w : g.neighbors(a)) --inside_count[w];
            status[a] = kRetired;  // below later anchors for good
        }
        current.clear();
    }

    int candidate() const {
        for (int v = 0; v < g.n(); ++v)
            if (status[v] == kFree && inside_count[v] == 1) return v;
        return -1;
    }

    // Free vertices reachable from some candidate through free vertices
    // carrying at most one inside-neighbor; no future extension can leave
    // this region.
    int reachable_gain() {
        ++stamp;
        stack.clear();
        int count = 0;
        for (int v = 0; v < g.n(); ++v)
            if (status[v] == kFree && inside_count[v] == 1) {
                mark[v] = stamp;
                stack.push_back(v);
            }
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++count;
            for (int w : g.neighbors(v))
                if (status[w] == kFree && inside_count[w] <= 1 && mark[w] != stamp) {
                    mark[w] = stamp;
                    stack.push_back(w);
                }
        }
        return count;
    }

    // Entered exactly once per distinct tree: right after current changed.
    void grow() {
        if (stopped) return;
        if (++nodes > budget) {
            stopped = true;
            exhausted = false;
            if (emit) throw std::runtime_error("induced tree enumeration exceeded node budget");
            return;
        }
        if (emit) {
            (*emit)(sorted_copy(current));
        } else if (current.size() > best.size()) {
            best = sorted_copy(current);
        }
        extend();
    }

    void extend() {
        if (stopped) return;
        int u = candidate();
        if (u < 0) return;
        if (!emit && current.size() + static_cast<std::size_t>(reachable_gain()) <= best.size())
            return;

        status[u] = kInside;
        current.push_back(u);
        for (int w : g.neighbors(u)) ++inside_count[w];
        grow();
        for (int w : g.neighbors(u)) --inside_count[w];
        current.pop_back();

        status[u] = kSkipped;
        extend();
        status[u] = kFree;
    }
};

using Mask = std::uint32_t;

bool mask_connected(const std::vector<Mask>& adj, Mask mask) {
    if (mask == 0) return false;
    Mask reach = mask & (~mask + 1);
    for (;;) {
        Mask grown = reach;
        Mask m = reach;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            grown |= adj[static_cast<std::size_t>(v)] & mask;
        }
        if (grown == reach) return reach == mask;
        reach = grown;
    }
}

long long mask_edges(const std::vector<Mask>& adj, Mask mask) {
    long long twice = 0;
    Mask m = mask;
    while (m) {
        int v = std::countr_zero(m);
        m &= m - 1;
        twice += std::popcount(adj[static_cast<std::size_t>(v)] & mask);
    }
    return twice / 2;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
    std::vector<Mask> adj(static_cast<std::size_t>(g.n()), 0);
    for (int v = 0; v < g.n(); ++v)
        for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= Mask{1} << w;
    return adj;
}

// First maximum in ascending mask order.
std::pair<int, Mask> mask_tree_scan(const std::vector<Mask>& adj, int n,
                                    std::uint64_t* visited = nullptr) {
    int best = 0;
    Mask best_mask = 0;
    const Mask full_end = n >= 31 ? 0 : (Mask{1} << n);
    for (Mask mask = 1; mask != full_end; ++mask) {
        if (visited) ++*visited;
        int pc = std::popcount(mask);
        if (pc <= best) continue;
        if (mask_edges(adj, mask) != pc - 1) continue;
        if (!mask_connected(adj, mask)) continue;
        best = pc;
        best_mask = mask;
    }
    return {best, best_mask};
}

std::vector<int> mask_vertices(Mask mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

}  // namespace

std::string graph_class_name(GraphClass c) {
    return c == GraphClass::TriangleFree ? "trianglefree" : "bipartite";
}

ExactResult max_induced_tree(const Graph& g, std::uint64_t node_budget) {
    TreeWalk walk(g, node_budget, nullptr);
    walk.run();
    ExactResult r;
    r.value = static_cast<long long>(walk.best.size());
    r.witness = walk.best;
    r.nodes_explored = walk.nodes;
    r.exhausted = walk.exhausted;
    return r;
}

ExactResult max_induced_tree_naive(const Graph& g) {
    if (g.n() > 20) throw std::invalid_argument("naive search supports n <= 20");
    ExactResult r;
    if (g.n() == 0) return r;
    auto adj = adjacency_masks(g);
    auto [value, mask] = mask_tree_scan(adj, g.n(), &r.nodes_explored);
    r.value = value;
    r.witness = mask_vertices(mask);
    return r;
}

void for_each_induced_tree(const Graph& g, std::uint64_t node_budget,
                           const std::function<void(const std::vector<int>&)>& fn) {
    TreeWalk walk(g, node_budget, &fn);
    walk.run();
}

ExactResult independence_number(const Graph& g, std::uint64_t node_budget) {
    const int n = g.n();
    if (n > 40) throw std::invalid_argument("independence number search supports n <= 40");
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj[static_cast<std::size_t>(v)] |= std::uint64_t{1} << w;

    ExactResult r;
    std::uint64_t best = 0;
    bool stopped = false;

    // Pivot on the candidate with the most candidates to knock out.
    auto pick = [&](std::uint64_t pool) {
        int choice = -1, deg = -1;
        std::uint64_t m = pool;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            int d = std::popcount(adj[static_cast<std::size_t>(v)] & pool);
            if (d > deg) {
                deg = d;
                choice = v;
            }
        }
        return choice;
    };

    auto walk = [&](auto&& self, std::uint64_t pool, std::uint64_t chosen) -> void {
        if (stopped) return;
        if (++r.nodes_explored > node_budget) {
            stopped = true;
            r.exhausted = false;
            return;
        }
        if (pool == 0) {
            if (std::popcount(chosen) > std::popcount(best)) best = chosen;
            return;
        }
        if (std::popcount(chosen) + std::popcount(pool) <= std::popcount(best)) return;
        int v = pick(pool);
        const std::uint64_t vbit = std::uint64_t{1} << v;
        self(self, pool & ~(adj[static_cast<std::size_t>(v)] | vbit), chosen | vbit);
        self(self, pool & ~vbit, chosen);
    };
    walk(walk, n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1, 0);

    r.value = std::popcount(best);
    while (best) {
        r.witness.push_back(std::countr_zero(best));
        best &= best - 1;
    }
    return r;
}

ExactResult max_up_growing_top_count(const Graph& g, const LevelDecomposition& levels,
                                     std::uint64_t node_budget) {
    const int n = g.n();
    if (n > 20) throw std::invalid_argument("up-growing search supports n <= 20");
    if (static_cast<int>(levels.level_of.size()) != n || !levels.unreachable.empty())
        throw std::invalid_argument("levels must cover the whole graph");
    if (levels.levels.empty() || levels.levels[0] != std::vector<int>{levels.root})
        throw std::invalid_argument("level zero must be the root alone");
    for (int v = 0; v < n; ++v) {
        const int lvv = levels.level_of[v];
        if (lvv < 0 || lvv >= static_cast<int>(levels.levels.size()))
            throw std::invalid_argument("level index out of range");
        const auto& row = levels.levels[static_cast<std::size_t>(lvv)];
        if (!std::binary_search(row.begin(), row.end(), v))
            throw std::invalid_argument("level rows disagree with level_of");
        bool rooted = lvv == 0;
        for (int w : g.neighbors(v)) {
            if (std::abs(levels.level_of[w] - lvv) > 1)
                throw std::invalid_argument("edge skips a level");
            rooted = rooted || levels.level_of[w] == lvv - 1;
        }
        if (!rooted) throw std::invalid_argument("vertex with no neighbor one level closer to the root");
    }

    const int top = static_cast<int>(levels.levels.size()) - 1;
    ExactResult r;
    std::function<void(const std::vector<int>&)> score = [&](const std::vector<int>& tree) {
        int low = INT_MAX;
        for (int v : tree) low = std::min(low, levels.level_of[v]);
        for (int v : tree) {
            if (levels.level_of[v] == low) continue;
            int below = 0, level_mates = 0;
            for (int w : g.neighbors(v)) {
                if (!std::binary_search(tree.begin(), tree.end(), w)) continue;
                if (levels.level_of[w] == levels.level_of[v] - 1) ++below;
                if (levels.level_of[w] == levels.level_of[v]) ++level_mates;
            }
            if (below != 1 || level_mates != 0) return;
        }
        long long at_top = 0;
        for (int v : tree)
            if (levels.level_of[v] == top) ++at_top;
        if (at_top > r.value) {
            r.value = at_top;
            r.witness = tree;
        }
    };
    for_each_induced_tree(g, node_budget, score);
    return r;
}

FSearchResult f_search_native(int n, GraphClass cls, std::size_t witness_cap) {
    if (n < 1 || n > 8) throw std::invalid_argument("native search supports 1 <= n <= 8");
    FSearchResult out;
    out.n = n;
    out.cls = cls;
    out.source = "native";

    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);

    std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
    long long best = LLONG_MAX;

    std::vector<int> color(static_cast<std::size_t>(n));
    auto two_colorable = [&]() {
        std::fill(color.begin(), color.end(), -1);
        for (int s = 0; s < n; ++s) {
            if (color[static_cast<std::size_t>(s)] >= 0) continue;
            color[static_cast<std::size_t>(s)] = 0;
            std::vector<int> stack{s};
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                Mask m = adj[static_cast<std::size_t>(v)];
                while (m) {
                    int w = std::countr_zero(m);
                    m &= m - 1;
                    if (color[static_cast<std::size_t>(w)] < 0) {
                        color[static_cast<std::size_t>(w)] = 1 - color[static_cast<std::size_t>(v)];
                        stack.push_back(w);
                    } else if (color[static_cast<std::size_t>(w)] == color[static_cast<std::size_t>(v)]) {
                        return false;
                    }
                }
            }
        }
        return true;
    };

    auto leaf = [&]() {
        const Mask full = n >= 31 ? ~Mask{0} : (Mask{1} << n) - 1;
        if (!mask_connected(adj, full)) return;
        ++out.graphs_considered;
        // Cheap lower bounds: an induced star around a maximum-degree
        // vertex (neighborhoods are independent in both classes), and a
        // shortest path from vertex 0, induced by minimality. Graphs they
        // already push above the running minimum cannot matter.
        int delta = 0;
        for (int v = 0; v < n; ++v)
            delta = std::max(delta, std::popcount(adj[static_cast<std::size_t>(v)]));
        long long lower = delta + 1;
        if (lower <= best) {
            Mask reach = 1, frontier = 1;
            int depth = 0;
            while (reach != full) {
                Mask next = 0;
                Mask m = frontier;
                while (m) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    next |= adj[static_cast<std::size_t>(v)];
                }
                frontier = next & ~reach;
                reach |= frontier;
                ++depth;
            }
            lower = std::max(lower, static_cast<long long>(depth) + 1);
        }
        if (lower > best) return;
        if (lower == best && out.argmin_graphs.size() >= witness_cap) return;
        long long value = mask_tree_scan(adj, n).first;
        if (value < best) {
            best = value;
            out.argmin_graphs.clear();
        }
        if (value == best && out.argmin_graphs.size() < witness_cap) {
            std::vector<std::pair<int, int>> edges;
            for (auto [u, v] : slots)
                if (adj[static_cast<std::size_t>(u)] >> v & 1) edges.emplace_back(u, v);
            out.argmin_graphs.push_back(write_graph6(Graph::from_edge_list(n, edges)));
        }
    };

    auto rec = [&](auto&& self, std::size_t si) -> void {
        if (si == slots.size()) {
            leaf();
            return;
        }
        self(self, si + 1);
        auto [u, v] = slots[si];
        if (cls == GraphClass::TriangleFree &&
            (adj[static_cast<std::size_t>(u)] & adj[static_cast<std::size_t>(v)]))
            return;
        adj[static_cast<std::size_t>(u)] |= Mask{1} << v;
        adj[static_cast<std::size_t>(v)] |= Mask{1} << u;
        if (cls != GraphClass::Bipartite || two_colorable()) self(self, si + 1);
        adj[static_cast<std::size_t>(u)] &= ~(Mask{1} << v);
        adj[static_cast<std::size_t>(v)] &= ~(Mask{1} << u);
    };
    rec(rec, 0);

    out.value = best == LLONG_MAX ? 0 : best;
    return out;
}

FSearchResult f_search_stream(std::istream& in, int n, GraphClass cls, int jobs, bool strict,
                              std::vector<StreamIssue>& issues, std::uint64_t node_budget,
                              std::size_t witness_cap) {
    FSearchResult out;
    out.cls = cls;
    out.source = "stream";

    std::vector<Graph> graphs;
    std::vector<long long> lines_of;
    std::string line;
    long long line_no = 0;
    int order = n;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line == "\r") continue;
        Graph g;
        try {
            g = parse_graph6(line);
        } catch (const std::exception& e) {
            if (strict)
                throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
            issues.push_back({line_no, e.what()});
            continue;
        }
        if (order == 0) order = g.n();
        const bool member = g.n() == order && is_connected(g) &&
                            (cls == GraphClass::Bipartite ? is_bipartite(g) : is_triangle_free(g));
        if (!member) {
            ++out.graphs_skipped;
            issues.push_back({line_no, "not a connected " + graph_class_name(cls) +
                                           " member on " + std::to_string(order) + " vertices"});
            continue;
        }
        graphs.push_back(std::move(g));
        lines_of.push_back(line_no);
    }
    if (graphs.empty()) throw std::invalid_argument("stream contains no scorable graph");
    out.n = order;

    std::vector<long long> values(graphs.size(), 0);
    std::vector<std::string> errors(graphs.size());
    const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
    std::atomic<std::size_t> cursor{0};
    auto score = [&]() {
        for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= graphs.size()) return;
            try {
                ExactResult r = max_induced_tree(graphs[i], node_budget);
                if (!r.exhausted)
                    errors[i] = "line " + std::to_string(lines_of[i]) +
                                ": node budget exhausted before an exact answer";
                values[i] = r.value;
            } catch (const std::exception& e) {
                errors[i] = "line " + std::to_string(lines_of[i]) + ": " + e.what();
            }
        }
    };
    if (workers == 1) {
        score();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(score);
        for (auto& th : pool) th.join();
    }
    for (const auto& err : errors)
        if (!err.empty()) throw std::runtime_error(err);

    long long best = LLONG_MAX;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        ++out.graphs_considered;
        if (values[i] < best) {
            best = values[i];
            out.argmin_graphs.clear();
        }
        if (values[i] == best && out.argmin_graphs.size() < witness_cap)
            out.argmin_graphs.push_back(write_graph6(graphs[i]));
    }
    out.value = best;
    return out;
}

}  // namespace itree

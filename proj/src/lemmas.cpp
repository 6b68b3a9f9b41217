#include "itree/lemmas.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace itree {

namespace {

using I128 = __int128;

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

int Bigraph::max_deg() const {
    std::size_t d = 0;
    for (const auto& nb : top_adj) d = std::max(d, nb.size());
    for (const auto& nb : bottom_adj) d = std::max(d, nb.size());
    return static_cast<int>(d);
}

Bigraph Bigraph::from_edges(int top_size, int bottom_size,
                            const std::vector<std::pair<int, int>>& edges) {
    if (top_size < 0 || bottom_size < 0) throw std::invalid_argument("negative layer size");
    Bigraph h;
    h.top_adj.assign(top_size, {});
    h.bottom_adj.assign(bottom_size, {});
    for (auto [a, b] : edges) {
        if (a < 0 || a >= top_size || b < 0 || b >= bottom_size)
            throw std::out_of_range("bigraph edge out of range");
        h.top_adj[a].push_back(b);
        h.bottom_adj[b].push_back(a);
    }
    for (auto& nb : h.top_adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    for (auto& nb : h.bottom_adj) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return h;
}

BipartiteView BipartiteView::make(const Graph& g, std::vector<int> top, std::vector<int> bottom) {
    BipartiteView view;
    view.base = &g;
    view.top = sorted_unique(std::move(top));
    view.bottom = sorted_unique(std::move(bottom));
    for (int v : view.top)
        if (v < 0 || v >= g.n()) throw std::out_of_range("view vertex out of range");
    for (int v : view.bottom)
        if (v < 0 || v >= g.n()) throw std::out_of_range("view vertex out of range");
    std::vector<int> both;
    std::set_intersection(view.top.begin(), view.top.end(), view.bottom.begin(),
                          view.bottom.end(), std::back_inserter(both));
    if (!both.empty()) throw std::invalid_argument("view layers must be disjoint");
    return view;
}

Bigraph BipartiteView::project() const {
    std::vector<int> pos(base->n(), -1);
    for (std::size_t i = 0; i < bottom.size(); ++i) pos[bottom[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (std::size_t i = 0; i < top.size(); ++i)
        for (int w : base->neighbors(top[i]))
            if (pos[w] >= 0) edges.emplace_back(static_cast<int>(i), pos[w]);
    return Bigraph::from_edges(static_cast<int>(top.size()), static_cast<int>(bottom.size()),
                               edges);
}

std::string outcome_tag_name(OutcomeTag tag) {
    switch (tag) {
        case OutcomeTag::Matching: return "matching";
        case OutcomeTag::BranchingUpForest: return "branching-up-forest";
        case OutcomeTag::IndependentSet: return "independent-set";
        case OutcomeTag::InducedMatching: return "induced-matching";
    }
    return "?";
}

SelectionOutcome select_up_forest(const Bigraph& h, Ratio eta) {
    const int na = h.top_size();
    const int nb = h.bottom_size();
    for (int a = 0; a < na; ++a)
        if (h.top_adj[a].empty())
            throw std::invalid_argument("select_up_forest: top vertex without bottom neighbor");

    SelectionOutcome out;
    out.stats.top_size = na;
    out.stats.bottom_size = nb;
    out.stats.delta = h.max_deg();
    out.stats.eta = eta;

    // Lowest degree-1 bottom per covered top vertex.
    std::vector<int> pick(na, -1);
    long long covered = 0;
    for (int b = 0; b < nb; ++b) {
        if (h.bottom_adj[b].size() != 1) continue;
        int a = h.bottom_adj[b][0];
        if (pick[a] < 0) {
            pick[a] = b;
            ++covered;
        }
    }

    if (static_cast<I128>(covered) * eta.den >= static_cast<I128>(eta.den - eta.num) * na) {
        out.tag = OutcomeTag::Matching;
        for (int a = 0; a < na; ++a)
            if (pick[a] >= 0) {
                out.forest.top.push_back(a);
                out.forest.bottom.push_back(pick[a]);
                out.forest.edges.emplace_back(a, pick[a]);
            }
        std::sort(out.forest.bottom.begin(), out.forest.bottom.end());
        out.stats.achieved = covered;
        return out;
    }

    // Greedy disjoint stars. Taking a center retires every bottom vertex
    // within distance two, which keeps the stars' top sets disjoint and
    // leaves no stray edge between chosen layers.
    out.tag = OutcomeTag::BranchingUpForest;
    std::vector<char> alive(nb, 0);
    for (int b = 0; b < nb; ++b) alive[b] = h.bottom_adj[b].size() >= 2;
    long long stars = 0;
    for (int v = 0; v < nb; ++v) {
        if (!alive[v]) continue;
        ++stars;
        out.forest.bottom.push_back(v);
        for (int a : h.bottom_adj[v]) {
            out.forest.top.push_back(a);
            out.forest.edges.emplace_back(a, v);
            for (int b2 : h.top_adj[a]) alive[b2] = 0;
        }
    }
    std::sort(out.forest.top.begin(), out.forest.top.end());
    std::sort(out.forest.edges.begin(), out.forest.edges.end());
    out.stats.achieved = stars;
    return out;
}

SelectionOutcome select_up_forest(const BipartiteView& view, Ratio eta) {
    Bigraph h = view.project();
    SelectionOutcome idx = select_up_forest(h, eta);
    SelectionOutcome out = idx;
    out.forest.top.clear();
    out.forest.bottom.clear();
    out.forest.edges.clear();
    for (int a : idx.forest.top) out.forest.top.push_back(view.top[a]);
    for (int b : idx.forest.bottom) out.forest.bottom.push_back(view.bottom[b]);
    for (auto [a, b] : idx.forest.edges)
        out.forest.edges.emplace_back(view.top[a], view.bottom[b]);
    std::sort(out.forest.top.begin(), out.forest.top.end());
    std::sort(out.forest.bottom.begin(), out.forest.bottom.end());
    std::sort(out.forest.edges.begin(), out.forest.edges.end());
    return out;
}

SelectionOutcome split_is_or_im(const Graph& g, const std::vector<int>& subset, Ratio eta) {
    auto s = sorted_unique(subset);
    for (int v : s)
        if (v < 0 || v >= g.n()) throw std::out_of_range("split subset out of range");

    std::vector<char> in(g.n(), 0), alive(g.n(), 0);
    for (int v : s) in[v] = alive[v] = 1;

    int delta = 0;
    for (int v : s) {
        int d = 0;
        for (int w : g.neighbors(v)) d += in[w];
        delta = std::max(delta, d);
    }

    SelectionOutcome out;
    out.stats.subset_size = static_cast<long long>(s.size());
    out.stats.delta = delta;
    out.stats.eta = eta;

    std::vector<std::pair<int, int>> taken;
    for (;;) {
        int u = -1, v = -1;
        for (int x : s) {
            if (!alive[x]) continue;
            for (int w : g.neighbors(x))
                if (w > x && alive[w]) {
                    u = x;
                    v = w;
                    break;
                }
            if (u >= 0) break;
        }
        if (u < 0) break;
        taken.emplace_back(u, v);
        alive[u] = alive[v] = 0;
        for (int w : g.neighbors(u)) alive[w] = 0;
        for (int w : g.neighbors(v)) alive[w] = 0;
    }

    std::vector<int> survivors;
    for (int x : s)
        if (alive[x]) survivors.push_back(x);

    const long long nS = static_cast<long long>(s.size());
    const long long r = static_cast<long long>(survivors.size());
    // An empty survivor set only counts as independent when S itself was
    // empty; otherwise the matching is the outcome (relevant at eta = 1).
    if (static_cast<I128>(r) * eta.den >= static_cast<I128>(eta.den - eta.num) * nS &&
        (r > 0 || nS == 0)) {
        out.tag = OutcomeTag::IndependentSet;
        out.vertices = std::move(survivors);
        out.stats.achieved = r;
    } else {
        out.tag = OutcomeTag::InducedMatching;
        out.edges = std::move(taken);
        out.stats.achieved = static_cast<long long>(out.edges.size());
    }
    return out;
}

namespace {

void check_selection_core(const Bigraph& h, Ratio eta, const SelectionOutcome& out,
                          CheckResult& res) {
    const long long na = h.top_size();
    const int delta = h.max_deg();
    auto edge_in_h = [&](int a, int b) {
        if (a < 0 || a >= h.top_size() || b < 0 || b >= h.bottom_size()) return false;
        const auto& nb = h.top_adj[a];
        return std::binary_search(nb.begin(), nb.end(), b);
    };

    if (out.tag != OutcomeTag::Matching && out.tag != OutcomeTag::BranchingUpForest) {
        res.fail("selection outcome has a split tag");
        return;
    }

    const auto& f = out.forest;
    if (f.top != sorted_unique(f.top)) res.fail("forest top not sorted unique");
    if (f.bottom != sorted_unique(f.bottom)) res.fail("forest bottom not sorted unique");

    std::vector<int> top_deg(h.top_size(), 0), bottom_deg(h.bottom_size(), 0);
    for (auto [a, b] : f.edges) {
        if (!edge_in_h(a, b)) {
            res.fail("forest edge absent from the bigraph");
            return;
        }
        ++top_deg[a];
        ++bottom_deg[b];
    }
    for (int a : f.top)
        if (top_deg[a] != 1) res.fail("forest top vertex degree != 1");
    for (int a = 0; a < h.top_size(); ++a)
        if (top_deg[a] > 0 && !std::binary_search(f.top.begin(), f.top.end(), a))
            res.fail("forest edge endpoint missing from top set");
    for (int b = 0; b < h.bottom_size(); ++b)
        if (bottom_deg[b] > 0 && !std::binary_search(f.bottom.begin(), f.bottom.end(), b))
            res.fail("forest edge endpoint missing from bottom set");

    // No stray bigraph edge may run between the chosen layers: the forest
    // must be induced, or downstream unions stop being forests.
    std::vector<char> in_top(h.top_size(), 0);
    for (int a : f.top) in_top[a] = 1;
    for (int b : f.bottom) {
        int within = 0;
        for (int a : h.bottom_adj[b]) within += in_top[a];
        if (within != bottom_deg[b]) res.fail("bigraph edge between layers missing from forest");
    }

    if (out.tag == OutcomeTag::Matching) {
        for (int b : f.bottom) {
            if (bottom_deg[b] != 1) res.fail("matching bottom vertex degree != 1");
            if (h.bottom_adj[b].size() != 1) res.fail("matched bottom vertex not degree 1 in bigraph");
        }
        const long long sz = static_cast<long long>(f.edges.size());
        if (static_cast<I128>(sz) * eta.den < static_cast<I128>(eta.den - eta.num) * na)
            res.fail("matching below the (1-eta)|A| threshold");
    } else {
        for (int b : f.bottom)
            if (bottom_deg[b] < 2) res.fail("branching bottom vertex degree < 2");
        const long long stars = static_cast<long long>(f.bottom.size());
        if (static_cast<I128>(stars) * eta.den * delta * delta * delta <
            static_cast<I128>(eta.num) * na)
            res.fail("branching below the eta|A|/delta^3 threshold");
    }
}

}  // namespace

CheckResult verify_selection(const Bigraph& h, Ratio eta, const SelectionOutcome& out) {
    CheckResult res;
    check_selection_core(h, eta, out, res);
    return res;
}

CheckResult verify_selection(const BipartiteView& view, Ratio eta, const SelectionOutcome& out) {
    CheckResult res;
    std::vector<int> top_pos(view.base->n(), -1), bottom_pos(view.base->n(), -1);
    for (std::size_t i = 0; i < view.top.size(); ++i) top_pos[view.top[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < view.bottom.size(); ++i)
        bottom_pos[view.bottom[i]] = static_cast<int>(i);

    SelectionOutcome idx = out;
    idx.forest.top.clear();
    idx.forest.bottom.clear();
    idx.forest.edges.clear();
    for (int v : out.forest.top) {
        if (v < 0 || v >= view.base->n() || top_pos[v] < 0) {
            res.fail("forest top vertex outside the view");
            return res;
        }
        idx.forest.top.push_back(top_pos[v]);
    }
    for (int v : out.forest.bottom) {
        if (v < 0 || v >= view.base->n() || bottom_pos[v] < 0) {
            res.fail("forest bottom vertex outside the view");
            return res;
        }
        idx.forest.bottom.push_back(bottom_pos[v]);
    }
    for (auto [a, b] : out.forest.edges) {
        if (a < 0 || a >= view.base->n() || top_pos[a] < 0 || b < 0 || b >= view.base->n() ||
            bottom_pos[b] < 0) {
            res.fail("forest edge outside the view");
            return res;
        }
        idx.forest.edges.emplace_back(top_pos[a], bottom_pos[b]);
    }
    std::sort(idx.forest.top.begin(), idx.forest.top.end());
    std::sort(idx.forest.bottom.begin(), idx.forest.bottom.end());
    std::sort(idx.forest.edges.begin(), idx.forest.edges.end());
    check_selection_core(view.project(), eta, idx, res);
    return res;
}

CheckResult verify_split(const Graph& g, const std::vector<int>& subset, Ratio eta,
                         const SelectionOutcome& out) {
    CheckResult res;
    auto s = sorted_unique(subset);
    std::vector<char> in(g.n(), 0);
    for (int v : s) {
        if (v < 0 || v >= g.n()) {
            res.fail("subset vertex out of range");
            return res;
        }
        in[v] = 1;
    }
    int delta = 0;
    for (int v : s) {
        int d = 0;
        for (int w : g.neighbors(v)) d += in[w];
        delta = std::max(delta, d);
    }
    const long long nS = static_cast<long long>(s.size());

    if (out.tag == OutcomeTag::IndependentSet) {
        for (int v : out.vertices)
            if (v < 0 || v >= g.n() || !in[v]) res.fail("survivor outside the subset");
        if (out.vertices != sorted_unique(out.vertices)) res.fail("survivors not sorted unique");
        for (int v : out.vertices)
            for (int w : g.neighbors(v))
                if (w > v && std::binary_search(out.vertices.begin(), out.vertices.end(), w))
                    res.fail("survivors are not independent");
        const long long r = static_cast<long long>(out.vertices.size());
        if (static_cast<I128>(r) * eta.den < static_cast<I128>(eta.den - eta.num) * nS)
            res.fail("independent set below the (1-eta)|S| threshold");
        if (r == 0 && nS > 0) res.fail("empty independent set for a nonempty subset");
    } else if (out.tag == OutcomeTag::InducedMatching) {
        std::vector<int> ends;
        for (auto [u, v] : out.edges) {
            if (u >= v) res.fail("matching edge not ordered u < v");
            if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !in[u] || !in[v]) {
                res.fail("matching endpoint outside the subset");
                return res;
            }
            if (!g.has_edge(u, v)) res.fail("matching pair is not an edge");
            ends.push_back(u);
            ends.push_back(v);
        }
        std::sort(ends.begin(), ends.end());
        if (std::adjacent_find(ends.begin(), ends.end()) != ends.end())
            res.fail("matching endpoints overlap");
        // Induced: no edge of G[S] between different pairs.
        for (auto [u, v] : out.edges)
            for (int x : {u, v})
                for (int w : g.neighbors(x))
                    if (in[w] && std::binary_search(ends.begin(), ends.end(), w) && w != u &&
                        w != v)
                        res.fail("edge between two matching pairs");
        const long long m = static_cast<long long>(out.edges.size());
        if (static_cast<I128>(m) * 2 * std::max(delta, 1) * eta.den <
            static_cast<I128>(eta.num) * nS)
            res.fail("matching below the eta|S|/(2 delta) threshold");
    } else {
        res.fail("split outcome has a selection tag");
    }
    return res;
}

}  // namespace itree

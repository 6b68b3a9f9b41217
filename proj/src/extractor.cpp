#include "itree/extractor.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <stdexcept>

namespace itree {

namespace {

using I128 = __int128;

std::vector<int> sorted_unique(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

void validate_common(const Graph& g, long long t, int root) {
    if (g.n() == 0) throw std::invalid_argument("extractor: empty graph");
    if (t < 3) throw std::invalid_argument("extractor: target size must be >= 3");
    if (root < 0 || root >= g.n()) throw std::out_of_range("extractor: root out of range");
    if (!is_connected(g)) throw std::invalid_argument("extractor: graph must be connected");
}

// Degree exit: a vertex of degree >= t-1 spans an induced star (its
// neighborhood is independent in both graph classes handled here).
// Depth exit: a vertex at BFS distance t gives a shortest path, induced
// because a chord would shortcut it.
std::optional<ExtractionResult> try_early_exits(const Graph& g, long long t,
                                                const LevelDecomposition& lv) {
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) >= t - 1) {
            std::vector<int> tree{v};
            for (int w : g.neighbors(v)) tree.push_back(w);
            ExtractionResult r;
            r.certificate = {sorted_unique(std::move(tree)), Provenance::Star};
            r.note = "degree exit at vertex " + std::to_string(v);
            return r;
        }
    }
    if (static_cast<long long>(lv.levels.size()) > t) {
        std::vector<int> path{lv.levels[static_cast<std::size_t>(t)][0]};
        while (path.back() != lv.root) {
            int cur = path.back();
            int parent = -1;
            for (int w : g.neighbors(cur))
                if (lv.level_of[w] == lv.level_of[cur] - 1) {
                    parent = w;
                    break;
                }
            path.push_back(parent);
        }
        ExtractionResult r;
        r.certificate = {sorted_unique(std::move(path)), Provenance::InducedPath};
        r.note = "depth exit at distance " + std::to_string(t);
        return r;
    }
    return std::nullopt;
}

int starting_level(const LevelDecomposition& lv, long long n, long long t) {
    for (std::size_t i = 0; i < lv.levels.size(); ++i)
        if (static_cast<I128>(t) * static_cast<long long>(lv.levels[i].size()) >= n)
            return static_cast<int>(i);
    throw std::logic_error("extractor: no level clears n/t");  // sum of <= t levels is n
}

struct Descent {
    std::vector<std::vector<int>> level_sets;  // by level index; empty = unset
    std::vector<StepRecord> steps;
    std::vector<int> uni;
    int ell = 0;

    void adopt(int level, std::vector<int> set, const Graph& g) {
        uni.insert(uni.end(), set.begin(), set.end());
        level_sets[static_cast<std::size_t>(level)] = std::move(set);
        if (!is_forest(g, uni)) throw std::logic_error("extractor: level union is not a forest");
    }
};

ExtractionResult finish_descent(const Graph& g, long long t, int root, Descent&& d, int k) {
    // Certificate: the forest component holding the final singleton.
    std::vector<char> in(g.n(), 0), seen(g.n(), 0);
    for (int v : d.uni) in[v] = 1;
    int start = d.level_sets[static_cast<std::size_t>(d.ell)][0];
    std::deque<int> q{start};
    seen[start] = 1;
    std::vector<int> tree{start};
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (int w : g.neighbors(v))
            if (in[w] && !seen[w]) {
                seen[w] = 1;
                tree.push_back(w);
                q.push_back(w);
            }
    }

    ExtractionResult r;
    r.certificate = {sorted_unique(std::move(tree)), Provenance::LevelConstruction};
    ExtractionTrace trace;
    trace.t = t;
    trace.root = root;
    trace.n = g.n();
    trace.k = k;
    trace.ell = d.ell;
    trace.steps = std::move(d.steps);
    for (int j = d.ell; j <= k; ++j)
        trace.level_sets.emplace_back(j, d.level_sets[static_cast<std::size_t>(j)]);
    r.trace = std::move(trace);
    return r;
}

void guard(const CheckResult& chk, const char* where) {
    if (!chk.ok) throw std::logic_error(std::string("extractor: ") + where + ": " + chk.issues[0]);
}

}  // namespace

long long default_target_size(long long n, double c) {
    if (n < 1) throw std::invalid_argument("default_target_size: n must be >= 1");
    if (!(c > 0)) throw std::invalid_argument("default_target_size: c must be positive");
    double raw = std::exp(c * std::sqrt(std::log(static_cast<double>(n))));
    double snapped = std::floor(raw + 1e-9);
    long long value = (raw - snapped <= 1e-9 && snapped >= 1)
                          ? static_cast<long long>(snapped)
                          : static_cast<long long>(std::ceil(raw));
    return std::max<long long>(2, value);
}

std::string step_kind_name(StepKind kind) {
    switch (kind) {
        case StepKind::Matching: return "matching";
        case StepKind::Branching: return "branching";
        case StepKind::Double: return "double";
    }
    return "?";
}

std::string provenance_name(Provenance p) {
    switch (p) {
        case Provenance::Star: return "star";
        case Provenance::InducedPath: return "induced-path";
        case Provenance::LevelConstruction: return "level-construction";
    }
    return "?";
}

ExtractionResult extract_bipartite(const Graph& g, long long t, int root) {
    validate_common(g, t, root);
    if (!is_bipartite(g)) throw std::invalid_argument("extractor: graph must be bipartite");
    auto lv = bfs_levels(g, root);
    if (auto early = try_early_exits(g, t, lv)) return *std::move(early);

    const long long n = g.n();
    const int k = starting_level(lv, n, t);
    Descent d;
    d.level_sets.assign(lv.levels.size(), {});
    d.adopt(k, lv.levels[static_cast<std::size_t>(k)], g);

    int i = k;
    while (d.level_sets[static_cast<std::size_t>(i)].size() > 1) {
        const auto& cur = d.level_sets[static_cast<std::size_t>(i)];
        auto view = BipartiteView::make(g, cur, lv.levels[static_cast<std::size_t>(i - 1)]);
        const Ratio eta(1, t);
        auto sel = select_up_forest(view, eta);
        guard(verify_selection(view, eta, sel), "selection");

        StepRecord rec;
        rec.from_level = i;
        rec.to_level = i - 1;
        rec.size_before = static_cast<long long>(cur.size());
        rec.m_prime = static_cast<long long>(sel.forest.bottom.size());
        if (sel.tag == OutcomeTag::Matching) {
            rec.kind = StepKind::Matching;
            rec.lemma_tags = {"up-forest/matching"};
        } else {
            rec.kind = StepKind::Branching;
            rec.lemma_tags = {"up-forest/branching"};
        }
        rec.size_after = rec.m_prime;
        d.steps.push_back(rec);
        d.adopt(i - 1, sel.forest.bottom, g);
        --i;
    }
    d.ell = i;
    return finish_descent(g, t, root, std::move(d), k);
}

ExtractionResult extract_triangle_free(const Graph& g, long long t, int root) {
    validate_common(g, t, root);
    if (!is_triangle_free(g)) throw std::invalid_argument("extractor: graph must be triangle-free");
    auto lv = bfs_levels(g, root);
    if (auto early = try_early_exits(g, t, lv)) return *std::move(early);

    const long long n = g.n();
    const int k = starting_level(lv, n, t);
    Descent d;
    d.level_sets.assign(lv.levels.size(), {});
    d.adopt(k, greedy_independent_set(g, lv.levels[static_cast<std::size_t>(k)]), g);

    int i = k;
    while (d.level_sets[static_cast<std::size_t>(i)].size() > 1) {
        const auto& cur = d.level_sets[static_cast<std::size_t>(i)];
        auto view = BipartiteView::make(g, cur, lv.levels[static_cast<std::size_t>(i - 1)]);
        const Ratio eta(1, t);
        auto sel = select_up_forest(view, eta);
        guard(verify_selection(view, eta, sel), "selection");

        StepRecord rec;
        rec.from_level = i;
        rec.size_before = static_cast<long long>(cur.size());
        rec.m_prime = static_cast<long long>(sel.forest.bottom.size());

        if (sel.tag == OutcomeTag::BranchingUpForest) {
            rec.kind = StepKind::Branching;
            rec.to_level = i - 1;
            rec.lemma_tags = {"up-forest/branching", "greedy-is"};
            auto next = greedy_independent_set(g, sel.forest.bottom);
            rec.size_after = static_cast<long long>(next.size());
            d.steps.push_back(rec);
            d.adopt(i - 1, std::move(next), g);
            --i;
            continue;
        }

        auto split = split_is_or_im(g, sel.forest.bottom, eta);
        guard(verify_split(g, sel.forest.bottom, eta, split), "split");

        if (split.tag == OutcomeTag::IndependentSet) {
            rec.kind = StepKind::Matching;
            rec.to_level = i - 1;
            rec.lemma_tags = {"up-forest/matching", "is-or-im/is"};
            rec.size_after = static_cast<long long>(split.vertices.size());
            d.steps.push_back(rec);
            d.adopt(i - 1, std::move(split.vertices), g);
            --i;
            continue;
        }

        // Induced matching: descend two levels through the contracted
        // structure whose top vertices are the matched pairs. The split
        // cannot fire at i = 1: the view over a two-vertex-plus set above
        // the root alone forces branching there.
        if (i < 2) throw std::logic_error("extractor: contracted descent at the root level");
        const auto& pairs = split.edges;
        std::vector<int> mid;
        for (auto [u, v] : pairs) {
            mid.push_back(u);
            mid.push_back(v);
        }
        mid = sorted_unique(std::move(mid));

        const auto& below = lv.levels[static_cast<std::size_t>(i - 2)];
        std::vector<int> pos(g.n(), -1);
        for (std::size_t bi = 0; bi < below.size(); ++bi) pos[below[bi]] = static_cast<int>(bi);
        std::vector<std::pair<int, int>> contracted_edges;
        for (std::size_t pi = 0; pi < pairs.size(); ++pi)
            for (int end : {pairs[pi].first, pairs[pi].second})
                for (int w : g.neighbors(end))
                    if (pos[w] >= 0) contracted_edges.emplace_back(static_cast<int>(pi), pos[w]);
        auto hc = Bigraph::from_edges(static_cast<int>(pairs.size()),
                                      static_cast<int>(below.size()), contracted_edges);
        const Ratio half(1, 2);
        auto sel2 = select_up_forest(hc, half);
        guard(verify_selection(hc, half, sel2), "contracted selection");

        std::vector<int> chosen;
        for (int b : sel2.forest.bottom) chosen.push_back(below[static_cast<std::size_t>(b)]);
        chosen = sorted_unique(std::move(chosen));
        auto next = greedy_independent_set(g, chosen);

        rec.kind = StepKind::Double;
        rec.to_level = i - 2;
        rec.im_pairs = static_cast<long long>(pairs.size());
        rec.m_prime2 = static_cast<long long>(chosen.size());
        rec.size_after = static_cast<long long>(next.size());
        rec.lemma_tags = {"up-forest/matching", "is-or-im/im",
                          sel2.tag == OutcomeTag::Matching ? "contracted/matching"
                                                           : "contracted/branching",
                          "greedy-is"};
        d.steps.push_back(rec);
        d.adopt(i - 1, mid, g);
        d.adopt(i - 2, std::move(next), g);
        i -= 2;
    }
    d.ell = i;
    return finish_descent(g, t, root, std::move(d), k);
}

namespace {

struct TraceChecker {
    const Graph& g;
    long long t;
    bool bipartite_mode;
    const ExtractionTrace& tr;
    CheckResult& res;
    LevelDecomposition lv;
    std::vector<std::vector<int>> sets;  // by level, validated
    std::vector<char> in_level_set;      // union membership
    std::vector<char> mid_level;         // levels holding induced-matching endpoints

    TraceChecker(const Graph& g_, long long t_, bool bip, const ExtractionTrace& tr_,
                 CheckResult& res_)
        : g(g_), t(t_), bipartite_mode(bip), tr(tr_), res(res_), lv(bfs_levels(g_, tr_.root)) {}

    const std::vector<int>& set_at(int level) { return sets[static_cast<std::size_t>(level)]; }

    long long members_in(const std::vector<int>& nbrs_of, int level) {
        long long cnt = 0;
        const auto& s = set_at(level);
        for (int w : nbrs_of)
            if (std::binary_search(s.begin(), s.end(), w)) ++cnt;
        return cnt;
    }

    void check_level_sets() {
        sets.assign(lv.levels.size(), {});
        if (tr.ell < 0 || tr.k < tr.ell ||
            tr.k >= static_cast<int>(lv.levels.size())) {
            res.fail("trace level range out of bounds");
            return;
        }
        if (static_cast<int>(tr.level_sets.size()) != tr.k - tr.ell + 1) {
            res.fail("trace level sets do not span ell..k");
            return;
        }
        for (int j = tr.ell; j <= tr.k; ++j) {
            const auto& entry = tr.level_sets[static_cast<std::size_t>(j - tr.ell)];
            if (entry.first != j) {
                res.fail("trace level sets not ascending by level");
                return;
            }
            auto s = entry.second;
            if (s.empty() || s != sorted_unique(s)) {
                res.fail("level set empty or not sorted unique");
                return;
            }
            for (int v : s)
                if (v < 0 || v >= g.n() || lv.level_of[v] != j) {
                    res.fail("level set member outside its BFS level");
                    return;
                }
            sets[static_cast<std::size_t>(j)] = std::move(s);
        }
        in_level_set.assign(g.n(), 0);
        for (int j = tr.ell; j <= tr.k; ++j)
            for (int v : set_at(j)) in_level_set[v] = 1;
    }

    void check_start() {
        const long long n = g.n();
        int expect_k = -1;
        for (std::size_t i = 0; i < lv.levels.size(); ++i)
            if (static_cast<I128>(t) * static_cast<long long>(lv.levels[i].size()) >= n) {
                expect_k = static_cast<int>(i);
                break;
            }
        if (tr.k != expect_k) res.fail("starting level is not the lowest level of size >= n/t");
        if (tr.k >= 0 && tr.k < static_cast<int>(lv.levels.size())) {
            const auto& lk = lv.levels[static_cast<std::size_t>(tr.k)];
            const auto& mk = set_at(tr.k);
            if (bipartite_mode) {
                if (mk != lk) res.fail("bipartite start set must be the whole level");
            } else if (static_cast<I128>(t) * static_cast<long long>(mk.size()) <
                       static_cast<long long>(lk.size())) {
                res.fail("start set below |L_k|/t");
            }
        }
    }

    void check_steps() {
        mid_level.assign(lv.levels.size(), 0);
        int cur = tr.k;
        long long matching_steps = 0;
        for (const auto& st : tr.steps) {
            const int span = st.kind == StepKind::Double ? 2 : 1;
            if (st.from_level != cur || st.to_level != cur - span) {
                res.fail("step levels do not chain from k down to ell");
                return;
            }
            if (st.to_level < tr.ell) {
                res.fail("step descends past ell");
                return;
            }
            if (st.size_before != static_cast<long long>(set_at(st.from_level).size()) ||
                st.size_after != static_cast<long long>(set_at(st.to_level).size())) {
                res.fail("recorded step sizes disagree with the level sets");
                return;
            }
            if (st.size_before < 2) res.fail("step taken from a singleton level set");

            const I128 before = st.size_before, after = st.size_after, T = t;
            switch (st.kind) {
                case StepKind::Matching:
                    ++matching_steps;
                    if (bipartite_mode) {
                        if (T * after < (T - 1) * before)
                            res.fail("matching step below (1-1/t) shrinkage");
                    } else {
                        if (T * T * after < (T - 1) * (T - 1) * before)
                            res.fail("matching step below (1-1/t)^2 shrinkage");
                    }
                    break;
                case StepKind::Branching:
                    if (bipartite_mode) {
                        if (T * T * T * T * after < before)
                            res.fail("branching step below the 1/t^4 floor");
                    } else {
                        if (T * T * T * T * T * after < before)
                            res.fail("branching step below the 1/t^5 floor");
                    }
                    break;
                case StepKind::Double: {
                    if (bipartite_mode) {
                        res.fail("double step in bipartite mode");
                        break;
                    }
                    if (st.from_level < 2) res.fail("double step at the root level");
                    mid_level[static_cast<std::size_t>(st.from_level - 1)] = 1;
                    const long long mid = static_cast<long long>(set_at(st.from_level - 1).size());
                    if (st.im_pairs < 1 || mid != 2 * st.im_pairs)
                        res.fail("induced matching level is not a set of pairs");
                    if (T * T * T * static_cast<I128>(mid) < (T - 1) * before)
                        res.fail("induced matching level below (1-1/t)/t^2 shrinkage");
                    if (st.m_prime2 >= 0) {
                        if (32 * T * T * T * static_cast<I128>(st.m_prime2) <
                            static_cast<I128>(mid))
                            res.fail("contracted selection below the 1/(32 t^3) floor");
                        if (T * after < static_cast<I128>(st.m_prime2))
                            res.fail("final thinning below the 1/t floor");
                    }
                    if (32 * T * T * T * T * T * T * T * after < (T - 1) * before)
                        res.fail("double step below the composite floor");
                    break;
                }
            }
            cur = st.to_level;
        }
        if (cur != tr.ell) res.fail("steps stop before reaching ell");
        if (set_at(tr.ell).size() != 1) res.fail("final level set is not a singleton");
        if (matching_steps > tr.k) res.fail("more matching steps than levels");
        if (tr.k >= t) res.fail("starting level not below t");
    }

    void check_structure() {
        // Inside every level set: independence, except induced-matching
        // levels, which must induce a perfect matching on themselves.
        for (int j = tr.ell; j <= tr.k; ++j) {
            const auto& s = set_at(j);
            for (int v : s) {
                long long within = members_in({g.neighbors(v).begin(), g.neighbors(v).end()}, j);
                bool mid = !bipartite_mode && mid_level[static_cast<std::size_t>(j)];
                if (mid ? within != 1 : within != 0) {
                    res.fail(mid ? "induced matching level is not 1-regular"
                                 : "level set is not independent");
                    return;
                }
            }
        }
        // Between consecutive sets: the downward degree a step kind promises.
        int cur = tr.k;
        for (const auto& st : tr.steps) {
            std::vector<int> nbrs;
            if (st.kind == StepKind::Matching || st.kind == StepKind::Branching) {
                for (int v : set_at(st.to_level)) {
                    nbrs.assign(g.neighbors(v).begin(), g.neighbors(v).end());
                    long long up = members_in(nbrs, st.from_level);
                    if (st.kind == StepKind::Matching && up != 1) {
                        res.fail("matched vertex without a unique upward neighbor");
                        return;
                    }
                    if (st.kind == StepKind::Branching && up < 2) {
                        res.fail("branching vertex with fewer than two upward neighbors");
                        return;
                    }
                }
            } else {
                const int mid = st.from_level - 1;
                for (int v : set_at(mid)) {
                    nbrs.assign(g.neighbors(v).begin(), g.neighbors(v).end());
                    if (members_in(nbrs, st.from_level) != 1) {
                        res.fail("pair endpoint without a unique upward neighbor");
                        return;
                    }
                }
                // Every kept bottom vertex reaches >= 2 distinct top-level
                // vertices through the pairs above it; that is the fan-out
                // a double step contributes.
                for (int v : set_at(st.to_level)) {
                    std::vector<int> two_up;
                    for (int w : g.neighbors(v)) {
                        if (lv.level_of[w] != mid || !in_level_set[w]) continue;
                        if (!std::binary_search(set_at(mid).begin(), set_at(mid).end(), w))
                            continue;
                        // w and its matched partner both look upward.
                        for (int x : g.neighbors(w))
                            if (std::binary_search(set_at(st.from_level).begin(),
                                                   set_at(st.from_level).end(), x))
                                two_up.push_back(x);
                        for (int p : g.neighbors(w)) {
                            if (!std::binary_search(set_at(mid).begin(), set_at(mid).end(), p))
                                continue;
                            for (int x : g.neighbors(p))
                                if (std::binary_search(set_at(st.from_level).begin(),
                                                       set_at(st.from_level).end(), x))
                                    two_up.push_back(x);
                        }
                    }
                    two_up = sorted_unique(std::move(two_up));
                    if (two_up.size() < 2) {
                        res.fail("double step vertex with fan-out below two");
                        return;
                    }
                    long long down = members_in(
                        {g.neighbors(v).begin(), g.neighbors(v).end()}, mid);
                    if (down < 1) {
                        res.fail("double step vertex detached from the pair level");
                        return;
                    }
                }
            }
            cur = st.to_level;
        }
        (void)cur;
    }

    void check_certificate(const TreeCertificate& cert) {
        std::vector<int> uni;
        for (int j = tr.ell; j <= tr.k; ++j) {
            const auto& s = set_at(j);
            uni.insert(uni.end(), s.begin(), s.end());
        }
        if (!is_forest(g, uni)) {
            res.fail("union of level sets is not a forest");
            return;
        }
        // Component of the final singleton.
        std::vector<char> in(g.n(), 0), seen(g.n(), 0);
        for (int v : uni) in[v] = 1;
        int start = set_at(tr.ell)[0];
        std::deque<int> q{start};
        seen[start] = 1;
        std::vector<int> comp{start};
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (int w : g.neighbors(v))
                if (in[w] && !seen[w]) {
                    seen[w] = 1;
                    comp.push_back(w);
                    q.push_back(w);
                }
        }
        comp = sorted_unique(std::move(comp));
        if (comp != cert.vertices) {
            res.fail("certificate is not the component of the final vertex");
            return;
        }
        long long b = 0;
        for (const auto& st : tr.steps)
            if (st.kind != StepKind::Matching) ++b;
        if (b > 60) {
            res.fail("fan-out exponent out of range");
            return;
        }
        if (static_cast<long long>(cert.vertices.size()) < (1LL << b))
            res.fail("certificate smaller than the 2^b fan-out bound");
    }
};

}  // namespace

CheckResult verify_extraction(const Graph& g, long long t, int root, bool bipartite_mode,
                              const ExtractionResult& result) {
    CheckResult res;
    if (t < 3) {
        res.fail("target size below 3");
        return res;
    }
    if (root < 0 || root >= g.n()) {
        res.fail("root out of range");
        return res;
    }
    if (!is_connected(g)) res.fail("graph is not connected");
    if (bipartite_mode && !is_bipartite(g)) res.fail("graph is not bipartite");
    if (!bipartite_mode && !is_triangle_free(g)) res.fail("graph is not triangle-free");
    if (!res.ok) return res;

    const auto& cert = result.certificate;
    if (cert.vertices.empty()) {
        res.fail("empty certificate");
        return res;
    }
    {
        auto s = cert.vertices;
        if (s != sorted_unique(s)) {
            res.fail("certificate not sorted unique");
            return res;
        }
        for (int v : s)
            if (v < 0 || v >= g.n()) {
                res.fail("certificate vertex out of range");
                return res;
            }
    }
    if (!is_induced_tree(g, cert.vertices)) {
        res.fail("certificate does not induce a tree");
        return res;
    }

    const long long size = static_cast<long long>(cert.vertices.size());
    switch (cert.provenance) {
        case Provenance::Star:
            if (size < t) res.fail("star certificate smaller than t");
            if (result.trace) res.fail("unexpected trace on an early exit");
            return res;
        case Provenance::InducedPath:
            if (size < t + 1) res.fail("path certificate smaller than t+1");
            if (result.trace) res.fail("unexpected trace on an early exit");
            return res;
        case Provenance::LevelConstruction:
            break;
    }
    if (!result.trace) {
        res.fail("level construction without a trace");
        return res;
    }
    const auto& tr = *result.trace;
    if (tr.t != t || tr.root != root || tr.n != g.n()) {
        res.fail("trace header disagrees with the inputs");
        return res;
    }

    TraceChecker checker(g, t, bipartite_mode, tr, res);
    checker.check_level_sets();
    if (!res.ok) return res;
    checker.check_start();
    if (!res.ok) return res;
    checker.check_steps();
    if (!res.ok) return res;
    checker.check_structure();
    if (!res.ok) return res;
    checker.check_certificate(cert);
    return res;
}

}  // namespace itree

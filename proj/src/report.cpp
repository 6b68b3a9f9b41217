#include "itree/report.hpp"

#include <cstdio>

#include "itree/graph6.hpp"

namespace itree {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string input_digest(const Graph& g) {
    const std::string canonical = g.n() <= 258047 ? write_graph6(g) : write_edge_list(g);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canonical)));
    return buf;
}

Json report_envelope(const std::string& command) {
    Json j;
    j["schema"] = kReportSchema;
    j["version"] = kVersion;
    j["command"] = command;
    return j;
}

Json json_of_graph_input(const Graph& g) {
    Json j;
    j["n"] = g.n();
    j["m"] = g.m();
    j["digest"] = input_digest(g);
    return j;
}

Json json_of_check(const CheckResult& check) {
    Json j;
    j["ok"] = check.ok;
    j["issues"] = check.issues;
    return j;
}

Json json_of_trace(const ExtractionTrace& trace) {
    Json j;
    j["t"] = trace.t;
    j["root"] = trace.root;
    j["n"] = trace.n;
    j["k"] = trace.k;
    j["ell"] = trace.ell;
    Json steps = Json::array();
    for (const auto& st : trace.steps) {
        Json s;
        s["kind"] = step_kind_name(st.kind);
        s["from_level"] = st.from_level;
        s["to_level"] = st.to_level;
        s["size_before"] = st.size_before;
        s["size_after"] = st.size_after;
        if (st.m_prime >= 0) s["m_prime"] = st.m_prime;
        if (st.m_prime2 >= 0) s["m_prime2"] = st.m_prime2;
        if (st.im_pairs >= 0) s["im_pairs"] = st.im_pairs;
        s["lemma_tags"] = st.lemma_tags;
        steps.push_back(std::move(s));
    }
    j["steps"] = std::move(steps);
    Json sets = Json::array();
    for (const auto& [level, verts] : trace.level_sets) {
        Json entry = Json::array();
        entry.push_back(level);
        entry.push_back(verts);
        sets.push_back(std::move(entry));
    }
    j["level_sets"] = std::move(sets);
    return j;
}

Json json_of_outcome(const SelectionOutcome& outcome) {
    Json j;
    j["tag"] = outcome_tag_name(outcome.tag);
    Json stats;
    stats["top_size"] = outcome.stats.top_size;
    stats["bottom_size"] = outcome.stats.bottom_size;
    stats["subset_size"] = outcome.stats.subset_size;
    stats["delta"] = outcome.stats.delta;
    stats["eta"] = outcome.stats.eta.str();
    stats["achieved"] = outcome.stats.achieved;
    j["stats"] = std::move(stats);
    if (outcome.tag == OutcomeTag::Matching || outcome.tag == OutcomeTag::BranchingUpForest) {
        Json f;
        f["top"] = outcome.forest.top;
        f["bottom"] = outcome.forest.bottom;
        Json edges = Json::array();
        for (auto [a, b] : outcome.forest.edges) edges.push_back(Json::array({a, b}));
        f["edges"] = std::move(edges);
        j["forest"] = std::move(f);
    } else if (outcome.tag == OutcomeTag::IndependentSet) {
        j["vertices"] = outcome.vertices;
    } else {
        Json edges = Json::array();
        for (auto [u, v] : outcome.edges) edges.push_back(Json::array({u, v}));
        j["edges"] = std::move(edges);
    }
    return j;
}

}  // namespace itree

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "itree/exact.hpp"
#include "itree/extractor.hpp"
#include "itree/generators.hpp"
#include "itree/graph6.hpp"
#include "itree/lemmas.hpp"

namespace py = pybind11;
using namespace itree;

PYBIND11_MODULE(_core, m) {
    m.doc() = "induced trees in triangle-free and bipartite graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return Graph::from_edge_list(n, edges);
             }),
             py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("m", &Graph::m)
        .def("degree", &Graph::degree, py::arg("v"))
        .def("has_edge", &Graph::has_edge, py::arg("u"), py::arg("v"))
        .def(
            "neighbors",
            [](const Graph& g, int v) {
                auto s = g.neighbors(v);
                return std::vector<int>(s.begin(), s.end());
            },
            py::arg("v"))
        .def("edge_list", &Graph::edge_list)
        .def("__repr__", [](const Graph& g) {
            return "Graph(n=" + std::to_string(g.n()) + ", m=" + std::to_string(g.m()) + ")";
        });

    m.def("parse_graph6", &parse_graph6, py::arg("text"));
    m.def("write_graph6", &write_graph6, py::arg("graph"));

    m.def("is_connected", &is_connected);
    m.def("is_triangle_free", &is_triangle_free);
    m.def("is_bipartite", &is_bipartite);
    m.def("bipartition", &bipartition);
    m.def("is_forest", &is_forest, py::arg("graph"), py::arg("subset"));
    m.def("is_induced_tree", &is_induced_tree, py::arg("graph"), py::arg("subset"));
    m.def("max_degree", &max_degree);

    py::class_<LevelDecomposition>(m, "LevelDecomposition")
        .def_readonly("root", &LevelDecomposition::root)
        .def_readonly("levels", &LevelDecomposition::levels)
        .def_readonly("level_of", &LevelDecomposition::level_of)
        .def_readonly("unreachable", &LevelDecomposition::unreachable);
    m.def("bfs_levels", &bfs_levels, py::arg("graph"), py::arg("root"));

    py::class_<LeveledGraph>(m, "LeveledGraph")
        .def_readonly("graph", &LeveledGraph::graph)
        .def_readonly("levels", &LeveledGraph::levels);
    m.def("path_of_bicliques", &path_of_bicliques, py::arg("k"));
    m.def("path_of_bicliques_subgraph", &path_of_bicliques_subgraph, py::arg("n"));

    py::class_<BlowUpResult>(m, "BlowUpResult")
        .def_readonly("graph", &BlowUpResult::graph)
        .def_readonly("copy_count", &BlowUpResult::copy_count)
        .def_readonly("copy_size", &BlowUpResult::copy_size)
        .def_readonly("tree_parent", &BlowUpResult::tree_parent)
        .def_readonly("tree_son_index", &BlowUpResult::tree_son_index);
    m.def(
        "blow_up",
        [](const Graph& base, const std::vector<int>& ports, int depth, long long cap) {
            BlowUpSpec spec;
            spec.base = base;
            spec.ports = ports;
            spec.depth = depth;
            return blow_up(spec, cap);
        },
        py::arg("base"), py::arg("ports"), py::arg("depth"), py::arg("cap") = 2000000LL);

    m.def("random_connected_triangle_free", &random_connected_triangle_free, py::arg("n"),
          py::arg("extra_edge_budget"), py::arg("seed"));
    m.def("random_connected_bipartite", &random_connected_bipartite, py::arg("n"),
          py::arg("extra_edge_budget"), py::arg("seed"));

    py::enum_<OutcomeTag>(m, "OutcomeTag")
        .value("Matching", OutcomeTag::Matching)
        .value("BranchingUpForest", OutcomeTag::BranchingUpForest)
        .value("IndependentSet", OutcomeTag::IndependentSet)
        .value("InducedMatching", OutcomeTag::InducedMatching);

    py::class_<UpForest>(m, "UpForest")
        .def_readonly("top", &UpForest::top)
        .def_readonly("bottom", &UpForest::bottom)
        .def_readonly("edges", &UpForest::edges);

    py::class_<SelectionStats>(m, "SelectionStats")
        .def_readonly("top_size", &SelectionStats::top_size)
        .def_readonly("bottom_size", &SelectionStats::bottom_size)
        .def_readonly("subset_size", &SelectionStats::subset_size)
        .def_readonly("delta", &SelectionStats::delta)
        .def_readonly("achieved", &SelectionStats::achieved);

    py::class_<SelectionOutcome>(m, "SelectionOutcome")
        .def_readonly("tag", &SelectionOutcome::tag)
        .def_readonly("forest", &SelectionOutcome::forest)
        .def_readonly("vertices", &SelectionOutcome::vertices)
        .def_readonly("edges", &SelectionOutcome::edges)
        .def_readonly("stats", &SelectionOutcome::stats)
        .def_property_readonly(
            "tag_name", [](const SelectionOutcome& o) { return outcome_tag_name(o.tag); });

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("ok", &CheckResult::ok)
        .def_readonly("issues", &CheckResult::issues);

    m.def(
        "select_up_forest",
        [](const Graph& g, std::vector<int> top, std::vector<int> bottom,
           const std::string& eta) {
            auto view = BipartiteView::make(g, std::move(top), std::move(bottom));
            return select_up_forest(view, Ratio::parse(eta));
        },
        py::arg("graph"), py::arg("top"), py::arg("bottom"), py::arg("eta"));
    m.def(
        "verify_up_forest_selection",
        [](const Graph& g, std::vector<int> top, std::vector<int> bottom,
           const std::string& eta, const SelectionOutcome& outcome) {
            auto view = BipartiteView::make(g, std::move(top), std::move(bottom));
            return verify_selection(view, Ratio::parse(eta), outcome);
        },
        py::arg("graph"), py::arg("top"), py::arg("bottom"), py::arg("eta"),
        py::arg("outcome"));
    m.def(
        "split_is_or_im",
        [](const Graph& g, const std::vector<int>& subset, const std::string& eta) {
            return split_is_or_im(g, subset, Ratio::parse(eta));
        },
        py::arg("graph"), py::arg("subset"), py::arg("eta"));
    m.def(
        "verify_split",
        [](const Graph& g, const std::vector<int>& subset, const std::string& eta,
           const SelectionOutcome& outcome) {
            return verify_split(g, subset, Ratio::parse(eta), outcome);
        },
        py::arg("graph"), py::arg("subset"), py::arg("eta"), py::arg("outcome"));

    m.def("default_target_size", &default_target_size, py::arg("n"), py::arg("c") = 0.3);

    py::class_<StepRecord>(m, "StepRecord")
        .def_property_readonly("kind",
                               [](const StepRecord& s) { return step_kind_name(s.kind); })
        .def_readonly("from_level", &StepRecord::from_level)
        .def_readonly("to_level", &StepRecord::to_level)
        .def_readonly("size_before", &StepRecord::size_before)
        .def_readonly("size_after", &StepRecord::size_after)
        .def_readonly("m_prime", &StepRecord::m_prime)
        .def_readonly("m_prime2", &StepRecord::m_prime2)
        .def_readonly("im_pairs", &StepRecord::im_pairs)
        .def_readonly("lemma_tags", &StepRecord::lemma_tags);

    py::class_<ExtractionTrace>(m, "ExtractionTrace")
        .def_readonly("t", &ExtractionTrace::t)
        .def_readonly("root", &ExtractionTrace::root)
        .def_readonly("n", &ExtractionTrace::n)
        .def_readonly("k", &ExtractionTrace::k)
        .def_readonly("ell", &ExtractionTrace::ell)
        .def_readonly("steps", &ExtractionTrace::steps)
        .def_readonly("level_sets", &ExtractionTrace::level_sets);

    py::class_<TreeCertificate>(m, "TreeCertificate")
        .def_readonly("vertices", &TreeCertificate::vertices)
        .def_property_readonly("provenance", [](const TreeCertificate& c) {
            return provenance_name(c.provenance);
        });

    py::class_<ExtractionResult>(m, "ExtractionResult")
        .def_readonly("certificate", &ExtractionResult::certificate)
        .def_readonly("trace", &ExtractionResult::trace)
        .def_readonly("note", &ExtractionResult::note);

    m.def("extract_bipartite", &extract_bipartite, py::arg("graph"), py::arg("t"),
          py::arg("root") = 0);
    m.def("extract_triangle_free", &extract_triangle_free, py::arg("graph"), py::arg("t"),
          py::arg("root") = 0);
    m.def("verify_extraction", &verify_extraction, py::arg("graph"), py::arg("t"),
          py::arg("root"), py::arg("bipartite_mode"), py::arg("result"));

    py::class_<ExactResult>(m, "ExactResult")
        .def_readonly("value", &ExactResult::value)
        .def_readonly("witness", &ExactResult::witness)
        .def_readonly("nodes_explored", &ExactResult::nodes_explored)
        .def_readonly("exhausted", &ExactResult::exhausted);

    m.def("max_induced_tree", &max_induced_tree, py::arg("graph"),
          py::arg("budget") = 50000000ULL);
    m.def("max_induced_tree_naive", &max_induced_tree_naive, py::arg("graph"));
    m.def("independence_number", &independence_number, py::arg("graph"),
          py::arg("budget") = 50000000ULL);
    m.def("max_up_growing_top_count", &max_up_growing_top_count, py::arg("graph"),
          py::arg("levels"), py::arg("budget") = 50000000ULL);

    py::enum_<GraphClass>(m, "GraphClass")
        .value("TriangleFree", GraphClass::TriangleFree)
        .value("Bipartite", GraphClass::Bipartite);

    py::class_<FSearchResult>(m, "FSearchResult")
        .def_readonly("n", &FSearchResult::n)
        .def_readonly("value", &FSearchResult::value)
        .def_readonly("argmin_graphs", &FSearchResult::argmin_graphs)
        .def_readonly("graphs_considered", &FSearchResult::graphs_considered)
        .def_readonly("graphs_skipped", &FSearchResult::graphs_skipped);

    m.def("f_search_native", &f_search_native, py::arg("n"), py::arg("cls"),
          py::arg("witness_cap") = static_cast<std::size_t>(100));
}

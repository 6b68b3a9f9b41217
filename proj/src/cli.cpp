#include "itree/cli.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <cctype>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iterator>
#include <sstream>
#include <thread>

#include "itree/exact.hpp"
#include "itree/extractor.hpp"
#include "itree/generators.hpp"
#include "itree/graph6.hpp"
#include "itree/report.hpp"

namespace itree {

namespace {

constexpr int kOk = 0;
constexpr int kRejected = 1;
constexpr int kUsage = 2;

struct Logger {
    int level = 0;
    std::ostream* err = nullptr;

    void info(const std::string& msg) const {
        if (level >= 1) *err << "itree: " << msg << '\n';
    }
    void debug(const std::string& msg) const {
        if (level >= 2) *err << "itree: " << msg << '\n';
    }
};

int env_log_level() {
    const char* raw = std::getenv("ITREE_LOG");
    if (!raw) return 0;
    const std::string v(raw);
    if (v == "debug") return 2;
    if (v == "info") return 1;
    return 0;
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
        .count();
}

// stdin carries either one edge-list document (first byte is a digit) or
// graph6, one graph per line.
std::vector<Graph> read_graph_inputs(std::istream& in) {
    std::string all{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    const auto first = all.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw std::invalid_argument("empty graph input");
    if (std::isdigit(static_cast<unsigned char>(all[first]))) {
        std::istringstream s(all);
        return {read_edge_list(s)};
    }
    std::vector<Graph> graphs;
    std::istringstream s(all);
    std::string line;
    long long line_no = 0;
    while (std::getline(s, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const std::exception& e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (graphs.empty()) throw std::invalid_argument("empty graph input");
    return graphs;
}

std::vector<int> parse_vertex_csv(const std::string& csv) {
    std::vector<int> out;
    std::stringstream s(csv);
    std::string item;
    while (std::getline(s, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad vertex list entry: " + item);
        out.push_back(v);
    }
    return out;
}

void emit_single(std::ostream& out, const Json& report) { out << report.dump(2) << '\n'; }

void emit_lines(std::ostream& out, const std::vector<Json>& reports) {
    for (const auto& r : reports) out << r.dump() << '\n';
}

struct GenerateArgs {
    std::string family;
    int k = 0, n = 0, r = 0, l = 0;
    long long edge_budget = -1;
    std::uint64_t seed = 1;
    std::string format = "graph6";
    long long cap = 2000000;
};

int cmd_generate(const GenerateArgs& a, std::ostream& out, const Logger& log) {
    Graph graph;
    Json extra;
    if (a.family == "path-of-bicliques") {
        if (a.k < 1) throw std::invalid_argument("--k must be >= 1");
        auto lg = path_of_bicliques(a.k);
        graph = std::move(lg.graph);
        extra["k"] = a.k;
        Json sizes = Json::array();
        for (const auto& lvl : lg.levels) sizes.push_back(lvl.size());
        extra["level_sizes"] = std::move(sizes);
    } else if (a.family == "path-of-bicliques-subgraph") {
        if (a.n < 1) throw std::invalid_argument("--n must be >= 1");
        auto lg = path_of_bicliques_subgraph(a.n);
        graph = std::move(lg.graph);
        extra["n"] = a.n;
        Json sizes = Json::array();
        for (const auto& lvl : lg.levels) sizes.push_back(lvl.size());
        extra["level_sizes"] = std::move(sizes);
    } else if (a.family == "blow-up") {
        if (a.k < 1) throw std::invalid_argument("--k must be >= 1");
        if (a.r < 0 || a.l < 0) throw std::invalid_argument("--r and --l must be >= 0");
        auto base = path_of_bicliques(a.k);
        if (a.r + 1 > base.graph.n())
            throw std::invalid_argument("base too small for the requested port count");
        BlowUpSpec spec;
        spec.base = std::move(base.graph);
        for (int w = 0; w <= a.r; ++w) spec.ports.push_back(w);
        spec.depth = a.l;
        auto res = blow_up(spec, a.cap);
        graph = std::move(res.graph);
        extra["k"] = a.k;
        extra["r"] = a.r;
        extra["l"] = a.l;
        extra["copies"] = res.copy_count;
        extra["copy_size"] = res.copy_size;
    } else if (a.family == "random-triangle-free" || a.family == "random-bipartite") {
        if (a.n < 1) throw std::invalid_argument("--n must be >= 1");
        const long long budget = a.edge_budget >= 0 ? a.edge_budget : 2LL * a.n;
        graph = a.family == "random-triangle-free"
                    ? random_connected_triangle_free(a.n, budget, a.seed)
                    : random_connected_bipartite(a.n, budget, a.seed);
        extra["n"] = a.n;
        extra["edge_budget"] = budget;
        extra["seed"] = a.seed;
    } else {
        throw std::invalid_argument("unknown family");
    }
    log.info("generated " + a.family + " with " + std::to_string(graph.n()) + " vertices");

    if (a.format == "graph6") {
        out << write_graph6(graph) << '\n';
    } else if (a.format == "edge-list") {
        out << write_edge_list(graph);
    } else {
        Json report = report_envelope("generate");
        Json result;
        result["op"] = "generate";
        result["family"] = a.family;
        result["params"] = std::move(extra);
        result["graph"] = json_of_graph_input(graph);
        if (graph.n() <= 258047) result["graph6"] = write_graph6(graph);
        report["result"] = std::move(result);
        emit_single(out, report);
    }
    return kOk;
}

struct ExtractArgs {
    std::string mode;
    long long t = 0;
    double c = 0.3;
    int root = 0;
    std::string trace_out;
    int jobs = 1;
};

int cmd_extract(const ExtractArgs& a, std::istream& in, std::ostream& out, const Logger& log) {
    auto graphs = read_graph_inputs(in);
    if (a.t != 0 && a.t < 3) throw std::invalid_argument("--t must be 0 (auto) or >= 3");
    const bool bipartite_mode = a.mode == "bipartite";

    struct Item {
        Json report;
        Json trace = nullptr;
        bool ok = false;
        bool errored = false;
    };
    std::vector<Item> items(graphs.size());

    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t i = cursor.fetch_add(1);
            if (i >= graphs.size()) return;
            const Graph& g = graphs[i];
            Item& item = items[i];
            item.report = report_envelope("extract");
            item.report["input"] = json_of_graph_input(g);
            const auto started = std::chrono::steady_clock::now();
            try {
                const long long t_eff =
                    a.t > 0 ? a.t : std::max<long long>(3, default_target_size(g.n(), a.c));
                auto res = bipartite_mode ? extract_bipartite(g, t_eff, a.root)
                                          : extract_triangle_free(g, t_eff, a.root);
                auto chk = verify_extraction(g, t_eff, a.root, bipartite_mode, res);
                Json result;
                result["op"] = "extract";
                result["mode"] = a.mode;
                result["t"] = t_eff;
                result["root"] = a.root;
                Json cert;
                cert["provenance"] = provenance_name(res.certificate.provenance);
                cert["size"] = res.certificate.vertices.size();
                cert["vertices"] = res.certificate.vertices;
                result["certificate"] = std::move(cert);
                if (!res.note.empty()) result["note"] = res.note;
                if (res.trace) {
                    result["trace"] = json_of_trace(*res.trace);
                    item.trace = result["trace"];
                }
                item.report["result"] = std::move(result);
                item.report["verification"] = json_of_check(chk);
                item.ok = chk.ok;
            } catch (const std::exception& e) {
                item.report["error"] = e.what();
                item.errored = true;
            }
            item.report["timing_ms"] = elapsed_ms(started);
        }
    };
    const int workers =
        std::max(1, std::min<int>(a.jobs, static_cast<int>(graphs.size())));
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    if (graphs.size() == 1) {
        emit_single(out, items[0].report);
    } else {
        std::vector<Json> lines;
        lines.reserve(items.size());
        for (auto& item : items) lines.push_back(std::move(item.report));
        emit_lines(out, lines);
    }

    if (!a.trace_out.empty()) {
        std::ofstream f(a.trace_out);
        if (!f) throw std::invalid_argument("cannot open trace output file: " + a.trace_out);
        if (graphs.size() == 1) {
            f << items[0].trace.dump(2) << '\n';
        } else {
            for (const auto& item : items) f << item.trace.dump() << '\n';
        }
        log.info("trace written to " + a.trace_out);
    }

    bool any_error = false, all_ok = true;
    for (const auto& item : items) {
        any_error = any_error || item.errored;
        all_ok = all_ok && item.ok;
    }
    if (any_error) return kUsage;
    return all_ok ? kOk : kRejected;
}

struct ExactArgs {
    std::string op = "t";
    std::uint64_t budget = 50000000;
    int root = 0;
};

CheckResult check_exact_witness(const Graph& g, const ExactArgs& a, const ExactResult& r) {
    CheckResult chk;
    if (a.op == "t" || a.op == "t-naive") {
        if (static_cast<long long>(r.witness.size()) != r.value)
            chk.fail("witness size disagrees with the value");
        if (r.value > 0 && !is_induced_tree(g, r.witness))
            chk.fail("witness does not induce a tree");
        if (r.value == 0 && g.n() > 0) chk.fail("zero value on a nonempty graph");
    } else if (a.op == "alpha") {
        if (static_cast<long long>(r.witness.size()) != r.value)
            chk.fail("witness size disagrees with the value");
        for (int v : r.witness)
            for (int w : r.witness)
                if (w > v && g.has_edge(v, w)) chk.fail("witness is not independent");
    } else {  // up-top
        auto lv = bfs_levels(g, a.root);
        const int top = static_cast<int>(lv.levels.size()) - 1;
        if (r.witness.empty()) {
            if (r.value != 0 || g.n() > 0) chk.fail("missing witness");
            return chk;
        }
        if (!is_induced_tree(g, r.witness)) chk.fail("witness does not induce a tree");
        int low = g.n();
        for (int v : r.witness) low = std::min(low, lv.level_of[v]);
        long long at_top = 0;
        for (int v : r.witness) {
            if (lv.level_of[v] == top) ++at_top;
            if (lv.level_of[v] == low) continue;
            int below = 0, mates = 0;
            for (int w : r.witness) {
                if (!g.has_edge(v, w)) continue;
                if (lv.level_of[w] == lv.level_of[v] - 1) ++below;
                if (lv.level_of[w] == lv.level_of[v]) ++mates;
            }
            if (below != 1 || mates != 0) chk.fail("witness does not grow upward");
        }
        if (at_top != r.value) chk.fail("top-level count disagrees with the value");
    }
    return chk;
}

int cmd_exact(const ExactArgs& a, std::istream& in, std::ostream& out, const Logger& log) {
    auto graphs = read_graph_inputs(in);
    std::vector<Json> reports;
    bool all_ok = true;
    for (const Graph& g : graphs) {
        Json report = report_envelope("exact");
        report["input"] = json_of_graph_input(g);
        const auto started = std::chrono::steady_clock::now();
        ExactResult r;
        if (a.op == "t") {
            r = max_induced_tree(g, a.budget);
        } else if (a.op == "t-naive") {
            r = max_induced_tree_naive(g);
        } else if (a.op == "alpha") {
            r = independence_number(g, a.budget);
        } else {
            r = max_up_growing_top_count(g, bfs_levels(g, a.root), a.budget);
        }
        auto chk = check_exact_witness(g, a, r);
        log.debug(a.op + " explored " + std::to_string(r.nodes_explored) + " nodes");
        Json result;
        result["op"] = "exact";
        result["operation"] = a.op;
        result["value"] = r.value;
        result["witness"] = r.witness;
        result["nodes_explored"] = r.nodes_explored;
        result["exhausted"] = r.exhausted;
        if (a.op == "up-top") result["root"] = a.root;
        report["result"] = std::move(result);
        report["verification"] = json_of_check(chk);
        report["timing_ms"] = elapsed_ms(started);
        reports.push_back(std::move(report));
        all_ok = all_ok && chk.ok;
    }
    if (reports.size() == 1) {
        emit_single(out, reports[0]);
    } else {
        emit_lines(out, reports);
    }
    return all_ok ? kOk : kRejected;
}

struct FSearchArgs {
    int n = 0;
    std::string cls;
    std::string source = "native";
    int jobs = 1;
    bool strict = false;
    std::uint64_t budget = 50000000;
    std::string golden;
    std::size_t witness_cap = 100;
};

int cmd_fsearch(const FSearchArgs& a, std::istream& in, std::ostream& out, const Logger& log) {
    const GraphClass cls =
        a.cls == "bipartite" ? GraphClass::Bipartite : GraphClass::TriangleFree;
    const auto started = std::chrono::steady_clock::now();
    FSearchResult res;
    std::vector<StreamIssue> issues;
    if (a.source == "native") {
        if (a.n < 1) throw std::invalid_argument("--n is required for the native source");
        res = f_search_native(a.n, cls, a.witness_cap);
    } else {
        res = f_search_stream(in, a.n, cls, a.jobs, a.strict, issues, a.budget, a.witness_cap);
    }
    log.info("fsearch minimum " + std::to_string(res.value) + " over " +
             std::to_string(res.graphs_considered) + " graphs");

    Json report = report_envelope("fsearch");
    Json result;
    result["op"] = "fsearch";
    result["n"] = res.n;
    result["class"] = graph_class_name(res.cls);
    result["source"] = res.source;
    result["value"] = res.value;
    result["argmin_graphs"] = res.argmin_graphs;
    result["graphs_considered"] = res.graphs_considered;
    result["graphs_skipped"] = res.graphs_skipped;
    Json issue_rows = Json::array();
    for (const auto& issue : issues) {
        Json row;
        row["line"] = issue.line;
        row["message"] = issue.message;
        issue_rows.push_back(std::move(row));
    }
    result["issues"] = std::move(issue_rows);
    report["result"] = std::move(result);

    CheckResult chk;
    if (!a.golden.empty()) {
        Json golden_info;
        golden_info["path"] = a.golden;
        nlohmann::json stored;
        std::ifstream gf(a.golden);
        if (gf) {
            gf >> stored;
            if (stored.contains("class") && stored["class"] != graph_class_name(res.cls))
                throw std::invalid_argument("golden file records a different graph class");
        } else {
            stored = {{"class", graph_class_name(res.cls)}, {"values", nlohmann::json::object()}};
        }
        const std::string key = std::to_string(res.n);
        if (stored["values"].contains(key)) {
            const long long expected = stored["values"][key].get<long long>();
            golden_info["action"] = "compared";
            golden_info["stored_value"] = expected;
            if (expected != res.value)
                chk.fail("value " + std::to_string(res.value) + " disagrees with golden " +
                         std::to_string(expected));
        } else {
            stored["values"][key] = res.value;
            std::ofstream gout(a.golden);
            if (!gout) throw std::invalid_argument("cannot write golden file: " + a.golden);
            gout << stored.dump(2) << '\n';
            golden_info["action"] = "recorded";
            golden_info["stored_value"] = res.value;
        }
        report["golden"] = std::move(golden_info);
    }
    report["verification"] = json_of_check(chk);
    report["timing_ms"] = elapsed_ms(started);
    emit_single(out, report);
    return chk.ok ? kOk : kRejected;
}

struct VerifyArgs {
    std::string lemma;
    std::string eta;
    std::string top_csv, bottom_csv, subset_csv;
};

int cmd_verify(const VerifyArgs& a, std::istream& in, std::ostream& out, const Logger& log) {
    auto graphs = read_graph_inputs(in);
    if (graphs.size() != 1)
        throw std::invalid_argument("verify expects exactly one input graph");
    const Graph& g = graphs[0];
    const Ratio eta = Ratio::parse(a.eta);
    if (eta.num > eta.den) throw std::invalid_argument("eta must lie in [0, 1]");

    Json report = report_envelope("verify");
    report["input"] = json_of_graph_input(g);
    const auto started = std::chrono::steady_clock::now();
    Json result;
    result["op"] = "verify";
    result["lemma"] = a.lemma;
    result["eta"] = eta.str();
    CheckResult chk;

    if (a.lemma == "lemma4") {
        std::vector<int> top, bottom;
        if (!a.top_csv.empty() || !a.bottom_csv.empty()) {
            if (a.top_csv.empty() || a.bottom_csv.empty())
                throw std::invalid_argument("supply both --top and --bottom or neither");
            top = parse_vertex_csv(a.top_csv);
            bottom = parse_vertex_csv(a.bottom_csv);
        } else {
            auto colors = bipartition(g);
            if (!colors)
                throw std::invalid_argument(
                    "graph is not bipartite; supply --top and --bottom explicitly");
            for (int v = 0; v < g.n(); ++v)
                ((*colors)[v] == 1 ? top : bottom).push_back(v);
        }
        auto view = BipartiteView::make(g, std::move(top), std::move(bottom));
        log.debug("lemma4 view: " + std::to_string(view.top.size()) + " top, " +
                  std::to_string(view.bottom.size()) + " bottom");
        auto sel = select_up_forest(view, eta);
        chk = verify_selection(view, eta, sel);
        result["outcome"] = json_of_outcome(sel);
        result["top"] = view.top;
        result["bottom"] = view.bottom;
    } else {
        std::vector<int> subset;
        if (!a.subset_csv.empty()) {
            subset = parse_vertex_csv(a.subset_csv);
        } else {
            subset.resize(static_cast<std::size_t>(g.n()));
            for (int v = 0; v < g.n(); ++v) subset[static_cast<std::size_t>(v)] = v;
        }
        auto sel = split_is_or_im(g, subset, eta);
        chk = verify_split(g, subset, eta, sel);
        result["outcome"] = json_of_outcome(sel);
        result["subset_size"] = subset.size();
    }

    report["result"] = std::move(result);
    report["verification"] = json_of_check(chk);
    report["timing_ms"] = elapsed_ms(started);
    emit_single(out, report);
    return chk.ok ? kOk : kRejected;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    Logger log{env_log_level(), &err};

    CLI::App app{"induced trees in triangle-free and bipartite graphs"};
    app.require_subcommand(1);

    GenerateArgs gen;
    auto* cgen = app.add_subcommand("generate", "emit a graph from a built-in family");
    cgen->add_option("--family", gen.family, "family name")
        ->required()
        ->check(CLI::IsMember({"path-of-bicliques", "path-of-bicliques-subgraph", "blow-up",
                               "random-triangle-free", "random-bipartite"}));
    cgen->add_option("--k", gen.k, "family width parameter");
    cgen->add_option("--n", gen.n, "vertex count");
    cgen->add_option("--r", gen.r, "sons per node (blow-up)");
    cgen->add_option("--l", gen.l, "tree depth (blow-up)");
    cgen->add_option("--edge-budget", gen.edge_budget,
                     "extra edge attempts for random families (default 2n)");
    cgen->add_option("--seed", gen.seed, "random seed (default 1)");
    cgen->add_option("--format", gen.format, "graph6 | edge-list | json")
        ->check(CLI::IsMember({"graph6", "edge-list", "json"}));
    cgen->add_option("--cap", gen.cap, "blow-up vertex cap");

    ExtractArgs ext;
    auto* cext = app.add_subcommand("extract", "find a large induced tree, graph on stdin");
    cext->add_option("--mode", ext.mode, "bipartite | trianglefree")
        ->required()
        ->check(CLI::IsMember({"bipartite", "trianglefree"}));
    cext->add_option("--t", ext.t, "target size (0 = derive from --c)");
    cext->add_option("--c", ext.c, "target size exponent scale (default 0.3)");
    cext->add_option("--root", ext.root, "BFS root (default 0)");
    cext->add_option("--trace-out", ext.trace_out, "write the trace JSON to this file");
    cext->add_option("--jobs", ext.jobs, "worker threads across a graph6 batch");

    ExactArgs exa;
    auto* cexa = app.add_subcommand("exact", "exact solvers, graph on stdin");
    cexa->add_option("--op", exa.op, "t | t-naive | alpha | up-top")
        ->check(CLI::IsMember({"t", "t-naive", "alpha", "up-top"}));
    cexa->add_option("--budget", exa.budget, "search node budget");
    cexa->add_option("--root", exa.root, "BFS root for up-top");

    FSearchArgs fse;
    auto* cfse = app.add_subcommand("fsearch", "minimum of t(G) over a graph family");
    cfse->add_option("--n", fse.n, "vertex count (required for native)");
    cfse->add_option("--class", fse.cls, "trianglefree | bipartite")
        ->required()
        ->check(CLI::IsMember({"trianglefree", "bipartite"}));
    cfse->add_option("--source", fse.source, "native | stream (stream reads graph6 on stdin)")
        ->check(CLI::IsMember({"native", "stream"}));
    cfse->add_option("--jobs", fse.jobs, "worker threads across stream graphs");
    cfse->add_flag("--strict", fse.strict, "malformed stream lines become errors");
    cfse->add_option("--budget", fse.budget, "per-graph search node budget");
    cfse->add_option("--golden", fse.golden,
                     "golden file: compare when the entry exists, record otherwise");
    cfse->add_option("--witness-cap", fse.witness_cap, "cap on reported argmin graphs");

    VerifyArgs ver;
    auto* cver = app.add_subcommand("verify", "run one selection engine and check it");
    cver->require_subcommand(1);
    auto* cl4 = cver->add_subcommand("lemma4", "up-forest selection over two layers");
    cl4->add_option("--eta", ver.eta, "threshold in [0,1], decimal or p/q")->required();
    cl4->add_option("--top", ver.top_csv, "comma-separated top layer (default: one color class)");
    cl4->add_option("--bottom", ver.bottom_csv, "comma-separated bottom layer");
    auto* cl5 = cver->add_subcommand("lemma5", "independent set or induced matching split");
    cl5->add_option("--eta", ver.eta, "threshold in [0,1], decimal or p/q")->required();
    cl5->add_option("--subset", ver.subset_csv, "comma-separated subset (default: all vertices)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("itree");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "itree: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (app.got_subcommand(cgen)) return cmd_generate(gen, out, log);
        if (app.got_subcommand(cext)) return cmd_extract(ext, in, out, log);
        if (app.got_subcommand(cexa)) return cmd_exact(exa, in, out, log);
        if (app.got_subcommand(cfse)) return cmd_fsearch(fse, in, out, log);
        if (app.got_subcommand(cver)) {
            ver.lemma = cver->got_subcommand(cl4) ? "lemma4" : "lemma5";
            return cmd_verify(ver, in, out, log);
        }
    } catch (const std::exception& e) {
        err << "itree: " << e.what() << '\n';
        return kUsage;
    }
    err << "itree: no subcommand\n";
    return kUsage;
}

}  // namespace itree

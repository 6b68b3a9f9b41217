#include <doctest.h>

#include <stdexcept>

#include "../support/oracles.hpp"
#include "itree/exact.hpp"
#include "itree/generators.hpp"

using namespace itree;

TEST_CASE("path of bicliques shape") {
    auto lg = path_of_bicliques(3);
    const auto& g = lg.graph;
    CHECK(g.n() == 9);
    REQUIRE(lg.levels.size() == 5);
    CHECK(lg.levels[0].size() == 1);
    CHECK(lg.levels[1].size() == 2);
    CHECK(lg.levels[2].size() == 3);
    CHECK(lg.levels[3].size() == 2);
    CHECK(lg.levels[4].size() == 1);
    // complete joins between consecutive levels, nothing else
    long long expected_m = 0;
    for (std::size_t i = 0; i + 1 < lg.levels.size(); ++i) {
        expected_m += static_cast<long long>(lg.levels[i].size()) *
                      static_cast<long long>(lg.levels[i + 1].size());
        for (int u : lg.levels[i])
            for (int v : lg.levels[i + 1]) CHECK(g.has_edge(u, v));
        for (int u : lg.levels[i])
            for (int v : lg.levels[i]) CHECK_FALSE((u != v && g.has_edge(u, v)));
    }
    CHECK(g.m() == expected_m);
    CHECK(is_connected(g));
    CHECK(is_bipartite(g));
    CHECK(is_triangle_free(g));
    CHECK_THROWS_AS(path_of_bicliques(0), std::invalid_argument);
}

TEST_CASE("path of bicliques largest induced tree") {
    // one center plus its full neighborhood on both sides, 2k-1 vertices
    for (int k = 2; k <= 4; ++k) {
        auto lg = path_of_bicliques(k);
        auto exact = max_induced_tree(lg.graph);
        REQUIRE(exact.exhausted);
        CHECK(exact.value == 2 * k - 1);
    }
    auto naive = max_induced_tree_naive(path_of_bicliques(4).graph);
    CHECK(naive.value == 7);
}

TEST_CASE("path of bicliques subgraph at n=15") {
    auto lg = path_of_bicliques_subgraph(15);
    const auto& g = lg.graph;
    CHECK(g.n() == 15);
    std::vector<std::size_t> sizes;
    for (const auto& level : lg.levels) sizes.push_back(level.size());
    CHECK(sizes == std::vector<std::size_t>{1, 2, 3, 3, 3, 2, 1});
    CHECK(is_connected(g));
    CHECK(is_bipartite(g));
    auto exact = max_induced_tree(g);
    REQUIRE(exact.exhausted);
    CHECK(exact.value == 7);
}

TEST_CASE("path of bicliques subgraph covers every order") {
    for (int n = 1; n <= 40; ++n) {
        auto lg = path_of_bicliques_subgraph(n);
        CHECK(lg.graph.n() == n);
        CHECK(is_connected(lg.graph));
        CHECK(is_bipartite(lg.graph));
        for (const auto& level : lg.levels) CHECK_FALSE(level.empty());
    }
    CHECK(path_of_bicliques_subgraph(16).levels.size() == 7);
    CHECK_THROWS_AS(path_of_bicliques_subgraph(0), std::invalid_argument);
}

TEST_CASE("blow-up copy layout and tree metadata") {
    BlowUpSpec spec;
    spec.base = path_of_bicliques(2).graph;  // 4 vertices
    spec.ports = {0, 1, 2};                  // r = 2
    spec.depth = 2;
    auto res = blow_up(spec);
    CHECK(res.copy_size == 4);
    CHECK(res.copy_count == 7);  // 1 + 2 + 4
    CHECK(res.graph.n() == 28);
    CHECK(res.tree_parent[0] == -1);
    CHECK(res.tree_son_index[0] == 0);
    CHECK(res.tree_parent[1] == 0);
    CHECK(res.tree_parent[2] == 0);
    CHECK(res.tree_son_index[1] == 1);
    CHECK(res.tree_son_index[2] == 2);
    CHECK(res.tree_parent[3] == 1);
    CHECK(res.tree_parent[5] == 2);

    // son copy c joins its port 0 to the parent's port w_i by one edge
    for (int c = 1; c < res.copy_count; ++c) {
        const int parent = res.tree_parent[c];
        const int port = spec.ports[static_cast<std::size_t>(res.tree_son_index[c])];
        CHECK(res.graph.has_edge(c * res.copy_size + spec.ports[0],
                                 parent * res.copy_size + port));
    }
    // exactly copy_count-1 edges cross between copies
    long long base_m = spec.base.m();
    CHECK(res.graph.m() == base_m * res.copy_count + (res.copy_count - 1));
}

TEST_CASE("blow-up vertex count follows the geometric series") {
    for (int r = 2; r <= 3; ++r) {
        for (int l = 0; l <= 3; ++l) {
            BlowUpSpec spec;
            spec.base = path_of_bicliques(2).graph;
            for (int w = 0; w <= r; ++w) spec.ports.push_back(w);
            spec.depth = l;
            auto res = blow_up(spec);
            long long copies = 0, power = 1;
            for (int d = 0; d <= l; ++d) {
                copies += power;
                power *= r;
            }
            CHECK(res.copy_count == copies);
            CHECK(res.graph.n() == 4 * copies);
        }
    }
}

TEST_CASE("blow-up preserves graph class") {
    BlowUpSpec spec;
    spec.base = path_of_bicliques(3).graph;
    spec.ports = {0, 1, 2, 3};
    spec.depth = 2;
    auto res = blow_up(spec);
    CHECK(is_connected(res.graph));
    CHECK(is_bipartite(res.graph));
    CHECK(is_triangle_free(res.graph));

    // triangle-free non-bipartite base stays triangle-free
    std::vector<std::pair<int, int>> c5;
    for (int v = 0; v < 5; ++v) c5.emplace_back(v, (v + 1) % 5);
    BlowUpSpec odd;
    odd.base = Graph::from_edge_list(5, c5);
    odd.ports = {0, 2, 4};
    odd.depth = 2;
    auto res2 = blow_up(odd);
    CHECK(is_connected(res2.graph));
    CHECK(is_triangle_free(res2.graph));
    CHECK_FALSE(is_bipartite(res2.graph));
}

TEST_CASE("blow-up depth zero is the base") {
    BlowUpSpec spec;
    spec.base = path_of_bicliques(3).graph;
    spec.ports = {0, 1};
    spec.depth = 0;
    auto res = blow_up(spec);
    CHECK(res.copy_count == 1);
    CHECK(res.graph.edge_list() == spec.base.edge_list());
}

TEST_CASE("blow-up input validation") {
    BlowUpSpec spec;
    spec.base = path_of_bicliques(2).graph;
    spec.ports = {0, 0};
    spec.depth = 1;
    CHECK_THROWS_AS(blow_up(spec), std::invalid_argument);  // duplicate port
    spec.ports = {0, 9};
    CHECK_THROWS_AS(blow_up(spec), std::out_of_range);
    spec.ports = {};
    CHECK_THROWS_AS(blow_up(spec), std::invalid_argument);  // no upward port
    spec.ports = {0, 1, 2};
    spec.depth = 40;
    CHECK_THROWS_AS(blow_up(spec), std::length_error);  // over the vertex cap
}

TEST_CASE("random triangle-free generator") {
    for (std::uint64_t seed : {1ULL, 2ULL, 99ULL}) {
        auto g = random_connected_triangle_free(40, 80, seed);
        CHECK(g.n() == 40);
        CHECK(is_connected(g));
        CHECK(is_triangle_free(g));
        CHECK(g.m() >= 39);
    }
    auto a = random_connected_triangle_free(25, 50, 7);
    auto b = random_connected_triangle_free(25, 50, 7);
    CHECK(a.edge_list() == b.edge_list());
    auto c = random_connected_triangle_free(25, 50, 8);
    CHECK(a.edge_list() != c.edge_list());
    CHECK(random_connected_triangle_free(1, 0, 1).n() == 1);
}

TEST_CASE("random bipartite generator") {
    for (std::uint64_t seed : {1ULL, 5ULL, 123ULL}) {
        auto g = random_connected_bipartite(40, 80, seed);
        CHECK(g.n() == 40);
        CHECK(is_connected(g));
        CHECK(is_bipartite(g));
    }
    auto a = random_connected_bipartite(30, 90, 4);
    auto b = random_connected_bipartite(30, 90, 4);
    CHECK(a.edge_list() == b.edge_list());
}

#include <set>

#include "cnhood/blocks.hpp"
#include "cnhood/generators.hpp"
#include "cnhood/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cnh;
using namespace cnh::test;

TEST_CASE("path decomposes into single-edge blocks") {
    const auto decomp = biconnected_components(path_graph(3));
    REQUIRE(decomp.blocks.size() == 2);
    for (const Block& b : decomp.blocks) CHECK(b.edges.size() == 1);
    CHECK(decomp.cut_vertices == std::vector<int>{1});
}

TEST_CASE("a cycle is one biconnected block") {
    const auto decomp = biconnected_components(cycle_graph(4));
    REQUIRE(decomp.blocks.size() == 1);
    CHECK(decomp.blocks[0].vertices == std::vector<int>{0, 1, 2, 3});
    CHECK(decomp.blocks[0].edges.size() == 4);
    CHECK(decomp.cut_vertices.empty());
}

TEST_CASE("bowtie splits at its cut vertex") {
    // Oracle: v is an articulation vertex iff removing it raises the
    // component count above one.
    const Graph g = bowtie_graph();
    std::vector<int> cuts_oracle;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (components_without_vertex(g, v) > 1) cuts_oracle.push_back(v);
    }
    CHECK(cuts_oracle == std::vector<int>{2});

    const auto decomp = biconnected_components(g);
    REQUIRE(decomp.blocks.size() == 2);
    for (const Block& b : decomp.blocks) {
        CHECK(b.vertices.size() == 3);
        CHECK(b.edges.size() == 3);
    }
    CHECK(decomp.cut_vertices == cuts_oracle);
}

TEST_CASE("decomposition rejects disconnected graphs") {
    CHECK_THROWS_AS(biconnected_components(Graph(2)), std::domain_error);
    CHECK_THROWS_AS(is_block_graph(Graph::from_edges(4, {{0, 1}, {2, 3}})), std::domain_error);
}

TEST_CASE("is_block_graph on the examples") {
    CHECK(is_block_graph(path_graph(6)));
    CHECK(is_block_graph(complete_graph(5)));
    CHECK(is_block_graph(bowtie_graph()));
    CHECK(is_block_graph(Graph(1)));
    CHECK_FALSE(is_block_graph(cycle_graph(4)));
    CHECK_FALSE(is_block_graph(diamond_graph()));
}

TEST_CASE("exhaustive n <= 6: blocks partition edges, cut vertices and cliques match oracles") {
    for (int n = 1; n <= 6; ++n) {
        enumerate_connected_graphs(n, [&](const Graph& g) {
            const auto decomp = biconnected_components(g);

            // Every edge lands in exactly one block.
            std::set<Edge> covered;
            std::size_t total = 0;
            for (const Block& b : decomp.blocks) {
                total += b.edges.size();
                covered.insert(b.edges.begin(), b.edges.end());
            }
            CHECK(total == g.edge_count());
            CHECK(covered.size() == g.edge_count());

            // Cut vertices against the removal oracle.
            std::vector<int> cuts_oracle;
            for (int v = 0; v < n; ++v) {
                if (components_without_vertex(g, v) > 1) cuts_oracle.push_back(v);
            }
            CHECK(decomp.cut_vertices == cuts_oracle);

            // Block-graph flag against pairwise adjacency inside each block.
            bool all_cliques = true;
            for (const Block& b : decomp.blocks) {
                for (std::size_t i = 0; i < b.vertices.size(); ++i) {
                    for (std::size_t j = i + 1; j < b.vertices.size(); ++j) {
                        if (!g.has_edge(b.vertices[i], b.vertices[j])) all_cliques = false;
                    }
                }
            }
            CHECK(is_block_graph(g) == all_cliques);
        });
    }
}

TEST_CASE("two blocks share at most one vertex, shared vertices are cuts") {
    Rng rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const GenSpec spec{GenModel::erdos_renyi, 9, 0.3, 0, 0, rng.next()};
        const Graph g = gen_graph(spec);
        const auto decomp = biconnected_components(g);
        const std::set<int> cuts(decomp.cut_vertices.begin(), decomp.cut_vertices.end());
        for (std::size_t i = 0; i < decomp.blocks.size(); ++i) {
            for (std::size_t j = i + 1; j < decomp.blocks.size(); ++j) {
                std::vector<int> shared;
                std::set_intersection(decomp.blocks[i].vertices.begin(),
                                      decomp.blocks[i].vertices.end(),
                                      decomp.blocks[j].vertices.begin(),
                                      decomp.blocks[j].vertices.end(), std::back_inserter(shared));
                REQUIRE(shared.size() <= 1);
                if (shared.size() == 1) CHECK(cuts.count(shared[0]) == 1);
            }
        }
    }
}

TEST_CASE("bridges are exactly the single-edge blocks") {
    CHECK(bridges(bowtie_graph()).empty());
    CHECK(bridges(path_graph(4)) == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
}

#include <set>
#include <sstream>

#include "cnhood/errors.hpp"
#include "cnhood/generators.hpp"
#include "cnhood/graph.hpp"
#include "cnhood/rng.hpp"
#include "doctest.h"
#include "helpers.hpp"

using namespace cnh;
using namespace cnh::test;

TEST_CASE("parse_edge_list handles the canonical format") {
    const Graph g = parse_edge_list("3 3\n0 1\n1 2\n0 2");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 2));
    CHECK(g.has_edge(0, 2));
}

TEST_CASE("parse_edge_list collapses duplicates against the declared count") {
    const Graph g = parse_edge_list("2 1\n0 1\n0 1");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("parse_edge_list accepts comments, blank lines and CRLF") {
    const Graph g = parse_edge_list("# a triangle\r\n\r\n3 3\r\n0 1\r\n# middle\r\n1 2\r\n0 2\r\n");
    CHECK(g.edge_count() == 3);
}

TEST_CASE("parse_edge_list rejects malformed input with line numbers") {
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list(""), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 1\n0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2\n0 1"), ParseError);

    try {
        parse_edge_list("3 2\n0 1\n1 1");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("self-loop") != std::string::npos);
    }
}

TEST_CASE("common_neighbors matches the examples") {
    CHECK(common_neighbors(complete_graph(3), 0, 1) == std::vector<int>{2});
    CHECK(common_neighbors(cycle_graph(4), 0, 1).empty());
    CHECK(common_neighbors(diamond_graph(), 0, 1) == std::vector<int>{2, 3});
    CHECK_THROWS_AS(common_neighbors(complete_graph(3), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(common_neighbors(complete_graph(3), 0, 7), std::invalid_argument);
}

TEST_CASE("common_neighbors agrees with the quadratic oracle and is symmetric") {
    Rng rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        const GenSpec spec{GenModel::erdos_renyi, 8, 0.5, 0, 0, rng.next()};
        const Graph g = gen_graph(spec);
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (u == v) continue;
                const auto fast = common_neighbors(g, u, v);
                CHECK(fast == brute_common_neighbors(g, u, v));
                CHECK(fast == common_neighbors(g, v, u));
                CHECK(static_cast<int>(fast.size()) <= std::min(g.degree(u), g.degree(v)));
            }
        }
    }
}

TEST_CASE("is_connected") {
    CHECK(is_connected(complete_graph(3)));
    CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
    CHECK(is_connected(Graph(1)));
    CHECK(is_connected(Graph(0)));
    CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("serialize then parse is the identity") {
    Rng rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        const GenSpec spec{GenModel::erdos_renyi, 2 + static_cast<int>(rng.below(9)), 0.5, 0, 0,
                           rng.next()};
        const Graph g = gen_graph(spec);
        CHECK(parse_edge_list(serialize_edge_list(g)) == g);
    }
}

TEST_CASE("from_edges validates input") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK(Graph::from_edges(2, {{0, 1}, {1, 0}}).edge_count() == 1);
}

TEST_CASE("to_dot highlights requested edges") {
    const std::string plain = to_dot(Graph::from_edges(2, {{0, 1}}));
    CHECK(plain.find("0 -- 1;") != std::string::npos);

    const std::string marked = to_dot(complete_graph(3), {{1, 0}});
    CHECK(marked.find("0 -- 1 [color=red, penwidth=2.0];") != std::string::npos);
    CHECK(marked.find("0 -- 2;") != std::string::npos);
    CHECK(marked.find("1 -- 2;") != std::string::npos);

    CHECK(to_dot(Graph(0)) == "graph G {\n}\n");
    CHECK_THROWS_AS(to_dot(cycle_graph(4), {{0, 2}}), std::invalid_argument);
}

TEST_CASE("find_cycle") {
    CHECK_FALSE(find_cycle(path_graph(5)).has_value());
    CHECK_FALSE(find_cycle(Graph(3)).has_value());
    for (const Graph& g : {cycle_graph(4), complete_graph(4), bowtie_graph()}) {
        const auto cycle = find_cycle(g);
        REQUIRE(cycle.has_value());
        REQUIRE(cycle->size() >= 3);
        std::set<int> distinct(cycle->begin(), cycle->end());
        CHECK(distinct.size() == cycle->size());
        for (std::size_t i = 0; i < cycle->size(); ++i)
            CHECK(g.has_edge((*cycle)[i], (*cycle)[(i + 1) % cycle->size()]));
    }
}

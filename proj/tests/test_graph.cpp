#include "homlab/graph.hpp"

#include "homlab/errors.hpp"
#include "common/oracles.hpp"
#include "common/suites.hpp"

#include <doctest.h>

using namespace homlab;
using namespace homlab::testing;

TEST_CASE("named families") {
    const Graph c4 = build_named_graph("cycle:4");
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

    CHECK(build_named_graph("complete:3").edge_count() == 3);
    CHECK(isomorphic(build_named_graph("biclique:2,2"), c4));
    CHECK(build_named_graph("star:3").vertex_count() == 4);
    CHECK(build_named_graph("path:1").edge_count() == 0);

    CHECK_THROWS_AS(build_named_graph("cycle:2"), std::invalid_argument);
    CHECK_THROWS_AS(build_named_graph("complete:0"), std::invalid_argument);
    CHECK_THROWS_AS(build_named_graph("nonsense:1"), ParseError);
    CHECK_THROWS_AS(build_named_graph("path:x"), ParseError);
}

TEST_CASE("gnp is reproducible and order-independent") {
    const Graph a = gnp_graph(16, Rat{1, 2}, 42);
    const Graph b = gnp_graph(16, Rat{1, 2}, 42);
    CHECK(a == b);
    const Graph c = gnp_graph(16, Rat{1, 2}, 43);
    CHECK_FALSE(a == c);
    // p = 1 gives the complete graph, p = 0 the empty one
    CHECK(gnp_graph(5, Rat{1}, 7) == complete_graph(5));
    CHECK(gnp_graph(5, Rat{0}, 7).edge_count() == 0);
}

TEST_CASE("subdivision") {
    CHECK(isomorphic(subdivision(complete_graph(3)), cycle_graph(6)));
    CHECK(isomorphic(subdivision(complete_graph(2)), path_graph(3)));
    const Graph sk4 = subdivision(complete_graph(4));
    CHECK(sk4.vertex_count() == 10);
    CHECK(sk4.edge_count() == 12);
}

TEST_CASE("k2t replacement") {
    CHECK(k2t_replacement(complete_graph(3), 1) == subdivision(complete_graph(3)));
    CHECK(isomorphic(k2t_replacement(complete_graph(2), 2), cycle_graph(4)));
    const Graph r = k2t_replacement(complete_graph(3), 2);
    CHECK(r.vertex_count() == 9);
    CHECK(r.edge_count() == 12);
    CHECK_THROWS_AS(k2t_replacement(complete_graph(3), 0), std::invalid_argument);

    for (const Graph& h : all_graphs_upto(4))
        CHECK(k2t_replacement(h, 1) == subdivision(h));
}

TEST_CASE("cartesian product") {
    CHECK(isomorphic(cartesian_product(complete_graph(2), complete_graph(2)), cycle_graph(4)));
    const Graph h = path_graph(4);
    CHECK(cartesian_product(h, Graph(1)) == h);
    const Graph grid = cartesian_product(path_graph(3), path_graph(3));
    CHECK(grid.vertex_count() == 9);
    CHECK(grid.edge_count() == 12);

    // |E(H1 x H2)| = |V(H2)||E(H1)| + |V(H1)||E(H2)|
    for (const Graph& a : all_graphs_upto(3))
        for (const Graph& b : all_graphs_upto(3))
            CHECK(cartesian_product(a, b).edge_count() ==
                  b.vertex_count() * a.edge_count() + a.vertex_count() * b.edge_count());
}

TEST_CASE("psi graph") {
    const Graph p = psi_graph(complete_graph(2), complete_graph(3));
    CHECK(p.vertex_count() == 6);
    CHECK(p.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(p.degree(v) == 3);

    const Graph q = psi_graph(complete_graph(2), complete_graph(2));
    CHECK(q.vertex_count() == 2);
    CHECK(q.edge_count() == 1);

    CHECK(psi_graph(complete_graph(3), complete_graph(2)).vertex_count() == 0);
}

TEST_CASE("bipartiteness") {
    CHECK(is_bipartite(cycle_graph(4)).has_value());
    CHECK_FALSE(is_bipartite(complete_graph(3)).has_value());
    CHECK(is_bipartite(cycle_graph(6)).has_value());
    const auto coloring = is_bipartite(cycle_graph(6));
    for (auto [u, v] : cycle_graph(6).edges()) CHECK((*coloring)[u] != (*coloring)[v]);

    // subdivisions are always bipartite
    for (const Graph& h : all_graphs_upto(4)) CHECK(is_bipartite(subdivision(h)).has_value());
}

TEST_CASE("edge list format") {
    CHECK(parse_graph("3 3\n0 1\n1 2\n2 0") == complete_graph(3));
    CHECK(parse_graph("2 0") == Graph(2));
    CHECK(parse_graph("# comment\n3 1\n# another\n0 2") == Graph(3, {{0, 2}}));

    CHECK_THROWS_AS(parse_graph("2 1\n0 0"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n1 0"), ParseError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 5"), ParseError);
    CHECK_THROWS_AS(parse_graph("nonsense"), ParseError);
    CHECK_THROWS_AS(parse_graph("3 2\n0 1"), ParseError);
    CHECK_THROWS_AS(parse_graph(""), ParseError);

    for (const Graph& g : all_graphs_upto(5)) {
        const std::string text = serialize_graph(g);
        CHECK(parse_graph(text) == g);
        CHECK(serialize_graph(parse_graph(text)) == text);
    }
}

TEST_CASE("codegree and adjacency helpers") {
    const Graph c6 = cycle_graph(6);
    for (int v = 0; v < 6; ++v) CHECK(c6.codegree(v, v) == c6.degree(v));
    for (const Graph& g : all_graphs_upto(5))
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v = 0; v < g.vertex_count(); ++v)
                CHECK(g.codegree(u, v) == oracle_codegree(g, u, v));
}

TEST_CASE("isomorphism brute force") {
    CHECK(isomorphic(cycle_graph(4), Graph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}})));
    CHECK_FALSE(isomorphic(cycle_graph(4), path_graph(4)));
    CHECK_FALSE(isomorphic(complete_graph(3), path_graph(3)));
}

TEST_CASE("graph structure queries") {
    CHECK(is_tree(path_graph(5)));
    CHECK_FALSE(is_tree(cycle_graph(4)));
    CHECK(is_connected(complete_graph(4)));
    const Graph two = disjoint_union(complete_graph(2), complete_graph(2));
    CHECK_FALSE(is_connected(two));
    CHECK(connected_components(two).size() == 2);

    const auto [sub, verts] = induced_subgraph(cycle_graph(4), {0, 1, 2});
    CHECK(sub == path_graph(3));
    CHECK(verts == std::vector<int>{0, 1, 2});
}

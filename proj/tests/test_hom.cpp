#include "homlab/hom.hpp"

#include "homlab/errors.hpp"
#include "common/oracles.hpp"
#include "common/suites.hpp"

#include <doctest.h>

using namespace homlab;
using namespace homlab::testing;

TEST_CASE("basic counts") {
    // |Hom(K_2, G)| = 2|E(G)|
    for (const Graph& g : all_graphs_upto(5))
        CHECK(count_homomorphisms(complete_graph(2), g) == BigInt{2} * g.edge_count());

    CHECK(count_homomorphisms(cycle_graph(4), complete_graph(3)) == 18);
    CHECK(oracle_count_homomorphisms(cycle_graph(4), complete_graph(3)) == 18);
    CHECK(count_homomorphisms(biclique_graph(1, 2), complete_graph(3)) == 12);

    CHECK(count_homomorphisms(Graph(), Graph()) == 1);
    CHECK(count_homomorphisms(Graph(3), Graph()) == 0);
    CHECK(count_homomorphisms(Graph(2), complete_graph(3)) == 9);
}

TEST_CASE("kernel agrees with the odometer oracle") {
    for (const Graph& h : all_graphs_upto(4))
        for (const Graph& g : all_graphs_upto(4))
            CHECK(count_homomorphisms(h, g) == oracle_count_homomorphisms(h, g));
}

TEST_CASE("disjoint union multiplicativity") {
    const auto& graphs = all_graphs_upto(3);
    for (const Graph& a : graphs)
        for (const Graph& b : graphs)
            for (const Graph& g : {complete_graph(3), path_graph(4), cycle_graph(5)})
                CHECK(count_homomorphisms(disjoint_union(a, b), g) ==
                      count_homomorphisms(a, g) * count_homomorphisms(b, g));
}

TEST_CASE("tree counting dynamic program") {
    CHECK(count_tree_homomorphisms(complete_graph(2), complete_graph(3)) == 6);
    CHECK(count_tree_homomorphisms(path_graph(3), complete_graph(3)) == 12);
    CHECK(count_tree_homomorphisms(biclique_graph(1, 3), complete_graph(2)) == 2);
    CHECK_THROWS_AS(count_tree_homomorphisms(cycle_graph(4), complete_graph(3)),
                    std::invalid_argument);

    for (const Graph& t : trees_upto(6))
        for (const Graph& g : connected_graphs_upto(4))
            CHECK(count_tree_homomorphisms(t, g) == count_homomorphisms(t, g));
}

TEST_CASE("cycle counts via matrix power") {
    CHECK(cycle_hom_trace(4, complete_graph(3)) == 18);
    CHECK(cycle_hom_trace(4, complete_graph(2)) == 2);
    CHECK(cycle_hom_trace(3, cycle_graph(4)) == 0);
    CHECK_THROWS_AS(cycle_hom_trace(2, complete_graph(3)), std::invalid_argument);

    for (int k = 3; k <= 6; ++k)
        for (const Graph& g : connected_graphs_upto(4))
            CHECK(cycle_hom_trace(k, g) == count_homomorphisms(cycle_graph(k), g));
}

TEST_CASE("sidorenko verdict") {
    const auto r = sidorenko_check(cycle_graph(4), complete_graph(3));
    CHECK(r.lhs == 18);
    CHECK(r.rhs == Rat{16});
    CHECK(r.holds);
    CHECK(*r.ratio == Rat{9, 8});

    for (const Graph& g : connected_graphs_upto(4)) {
        const auto edge = sidorenko_check(complete_graph(2), g);
        CHECK(edge.lhs == BigInt{2} * g.edge_count());
        CHECK(Rat{edge.lhs} == edge.rhs);
        CHECK(edge.holds);
    }

    const auto zero = sidorenko_check(complete_graph(2), Graph(3));
    CHECK(zero.rhs == 0);
    CHECK(zero.holds);
    CHECK_FALSE(zero.ratio.has_value());

    CHECK_THROWS_AS(sidorenko_check(complete_graph(2), Graph()), std::invalid_argument);

    // bipartite families known to satisfy the bound, against a small sweep
    for (const Graph& h : {complete_graph(2), path_graph(3), path_graph(4), cycle_graph(4),
                           biclique_graph(1, 3), biclique_graph(2, 2), cycle_graph(6)})
        for (const Graph& g : connected_graphs_upto(4))
            CHECK(sidorenko_check(h, g).holds);
}

TEST_CASE("weighted homomorphism sums") {
    const int n = 4;
    std::vector<std::vector<Rat>> ones(n, std::vector<Rat>(n, Rat{1}));
    CHECK(weighted_hom_count(complete_graph(2), WeightedGraph(n, ones)) == Rat{n * n});

    // codegree weights of K_3: diagonal 2/3, off-diagonal 1/3
    std::vector<std::vector<Rat>> w(3, std::vector<Rat>(3, Rat{1, 3}));
    for (int i = 0; i < 3; ++i) w[i][i] = Rat{2, 3};
    CHECK(weighted_hom_count(complete_graph(2), WeightedGraph(3, w)) == Rat{4});

    std::vector<std::vector<Rat>> half(2, std::vector<Rat>(2, Rat{1, 2}));
    CHECK(weighted_hom_count(complete_graph(3), WeightedGraph(2, half)) == Rat{1});
}

TEST_CASE("enumeration is lexicographic and budgeted") {
    const auto homs = enumerate_homomorphisms(complete_graph(2), complete_graph(3));
    CHECK(homs.size() == 6);
    CHECK(std::is_sorted(homs.begin(), homs.end()));
    for (const auto& h : homs) CHECK(is_homomorphism(complete_graph(2), complete_graph(3), h));

    CHECK_THROWS_AS(enumerate_homomorphisms(Graph(8), complete_graph(4), 1000), BudgetExceeded);
}

TEST_CASE("product counts transfer to the auxiliary graph") {
    for (const Graph& h : {complete_graph(2), path_graph(3)})
        for (const Graph& k : {complete_graph(2), cycle_graph(4)})
            for (const Graph& g : connected_graphs_upto(3))
                CHECK(count_homomorphisms(cartesian_product(h, k), g) ==
                      count_homomorphisms(h, psi_graph(k, g)));
}

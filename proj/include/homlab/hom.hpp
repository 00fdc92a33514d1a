#pragma once

#include "homlab/graph.hpp"
#include "homlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace homlab {

struct HomCount {
    BigInt value;
};

/// Exact number of homomorphisms H -> G, counted as labeled maps.
/// Hom of the empty graph is 1; a nonempty H into the 0-vertex G gives 0.
BigInt count_homomorphisms(const Graph& H, const Graph& G);

/// All homomorphisms H -> G in lexicographic order of image arrays.
/// Throws BudgetExceeded once more than max_results maps exist.
std::vector<Homomorphism> enumerate_homomorphisms(const Graph& H, const Graph& G,
                                                  std::size_t max_results = 5'000'000);

/// Dynamic program over a rooted tree; T must be a tree.
BigInt count_tree_homomorphisms(const Graph& T, const Graph& G);

/// trace(A^k) for the adjacency matrix of G, k >= 3; equals |Hom(C_k, G)|.
BigInt cycle_hom_trace(int k, const Graph& G);

struct SidorenkoReport {
    BigInt lhs;                // |Hom(H,G)|
    Rat rhs;                   // |V(G)|^|V(H)| * (2|E(G)|/|V(G)|^2)^|E(H)|
    bool holds = false;        // lhs >= rhs
    std::optional<Rat> ratio;  // lhs/rhs when rhs > 0
};

/// Exact rational comparison of the homomorphism count against the
/// random-map expectation; requires |V(G)| >= 1.
SidorenkoReport sidorenko_check(const Graph& H, const Graph& G);

/// sum over all maps V(H) -> V(G) of the product of W over the edges of H.
Rat weighted_hom_count(const Graph& H, const WeightedGraph& W);

}  // namespace homlab

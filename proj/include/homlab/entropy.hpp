#pragma once

#include "homlab/brw.hpp"
#include "homlab/graph.hpp"
#include "homlab/treedecomp.hpp"

#include <string>
#include <vector>

namespace homlab {

/// Entropies are transcendental; exact rational probabilities are
/// converted to double at the last step and all float comparisons carry
/// this tolerance.
inline constexpr double kEntropyTol = 1e-9;

/// Shannon entropy in natural log; terms with p = 0 contribute 0.
double entropy(const ExactDistribution& dist);

/// H(Y|X) = H(X,Y) - H(X), both sides read off one underlying law.
double conditional_entropy(const ExactDistribution& dist, const std::vector<int>& coords_x,
                           const std::vector<int>& coords_y);

struct EntropyRow {
    std::string label;
    double value;
};

struct TreeEntropyReport {
    double entropy_value = 0;
    double lower_bound = 0;
    double slack = 0;
    bool edge_marginal_identity = false;  // joint edge entropies sum to |E(T)| log 2|E(G)|
    bool vertex_entropy_bound = false;    // sum (deg-1) H(w(v)) <= (2|E|-|V|) log |V(G)|
    std::vector<EntropyRow> components;

    bool ok() const {
        return slack >= -kEntropyTol && edge_marginal_identity && vertex_entropy_bound;
    }
};

/// Entropy of the tree walk against its closed-form lower bound,
/// together with the two identities feeding the bound's proof.
TreeEntropyReport tree_entropy_bound(const Graph& T, const Graph& G,
                                     std::size_t max_support = 5'000'000);

struct ChainEntropyReport {
    double entropy_value = 0;
    double lower_bound = 0;
    double slack = 0;
    bool telescoping = false;          // H(w) = sum_X H(w(X)) - sum_XY H(w(X cap Y))
    bool bag_bounds = false;           // every H(w(X)) meets the per-bag bound
    bool intersection_bounds = false;  // H(w(X cap Y)) <= |X cap Y| log |V(G)|
    bool counting_edges = false;       // sum |E(H[X])| == |E(H)|
    bool counting_vertices = false;    // sum |X| - sum |X cap Y| == |V(H)|
    bool hom_log_bound = false;        // H(w) <= log |Hom(H,G)|
    std::vector<EntropyRow> components;

    bool ok() const {
        return slack >= -kEntropyTol && telescoping && bag_bounds && intersection_bounds &&
               counting_edges && counting_vertices && hom_log_bound;
    }
};

/// The full entropy chain for the composite embedding of a strongly
/// tree-decomposable H.
ChainEntropyReport std_entropy_chain(const Graph& H, const TreeDecomposition& D, const Graph& G,
                                     int root_bag = 0, std::size_t max_support = 5'000'000);

}  // namespace homlab

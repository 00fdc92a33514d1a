#pragma once

#include "homlab/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace homlab {

/// Bag family plus a tree on bag indices. Bags are kept sorted; bag
/// equality is set equality.
struct TreeDecomposition {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;
};

struct AxiomResult {
    bool ok = true;
    std::string witness;  // counterexample description when !ok
};

struct DecompositionDiagnostics {
    AxiomResult cover_vertices;
    AxiomResult cover_edges;
    AxiomResult path_connectivity;
    // strong conditions; only evaluated by validate_strong
    AxiomResult edge_disjoint_trees;
    AxiomResult intersection_isomorphism;
    bool strong_checked = false;
    // set when some tree-adjacent bag pair has empty intersection and the
    // single-fixed-vertex convention was applied
    bool empty_intersection_convention_used = false;

    bool valid() const {
        return cover_vertices.ok && cover_edges.ok && path_connectivity.ok &&
               (!strong_checked || (edge_disjoint_trees.ok && intersection_isomorphism.ok));
    }
};

/// Checks the three tree-decomposition axioms exhaustively.
/// Throws std::invalid_argument when D is not structurally well-formed
/// (bad indices, empty bags, tree_edges not a tree on the bags).
DecompositionDiagnostics validate_decomposition(const Graph& H, const TreeDecomposition& D);

/// Additionally checks that the bags induce edge-disjoint trees and that
/// every tree-adjacent bag pair admits an intersection-fixing isomorphism
/// between the minimal subtrees around the intersection.
DecompositionDiagnostics validate_strong(const Graph& H, const TreeDecomposition& D);

/// Unique minimal connected subtree of the tree T containing S.
/// For empty S returns the designated single vertex (lowest index).
std::vector<int> minimal_subtree(const Graph& T, const std::vector<int>& S);

/// Same, but within the tree H[bag] (bag sorted, inducing a tree in H);
/// vertices keep their H labels. Empty S gives the lowest bag vertex.
std::vector<int> minimal_subtree_within(const Graph& H, const std::vector<int>& bag,
                                        const std::vector<int>& S);

/// Graph isomorphism between host[t1] and host[t2] fixing `fixed`
/// pointwise, or nullopt. Found by backtracking over degree-compatible
/// assignments.
std::optional<std::vector<std::pair<int, int>>> rooted_iso_fixing(
    const Graph& host, const std::vector<int>& t1, const std::vector<int>& t2,
    const std::vector<int>& fixed);

struct SearchBudget {
    int max_vertices = 10;
    std::uint64_t max_nodes = 2'000'000;
};

struct StrongSearchResult {
    std::optional<TreeDecomposition> decomposition;
    bool exhaustive = false;
    std::uint64_t nodes_explored = 0;
};

/// Searches bag families derived from edge-partitions of H into induced
/// trees, then tree structures on the bags. Deterministic order; throws
/// BudgetExceeded when limits are hit, so a returned none is exhaustive.
StrongSearchResult find_strong_decomposition(const Graph& H, const SearchBudget& budget = {});

struct FamilyClassification {
    bool reflection_tree = false;
    std::optional<std::vector<int>> tree_arrangeable_witness;
};

/// reflection_tree: the bag tree of D is a star (needs validate_strong(H,D)).
/// tree_arrangeable_witness: an independent set A whose closed
/// neighborhoods form a valid strong decomposition, searched independently
/// of D.
FamilyClassification classify_family(const Graph& H, const TreeDecomposition& D,
                                     const SearchBudget& budget = {});

// JSON object {"bags": [[int,...],...], "tree_edges": [[int,int],...]}
TreeDecomposition parse_decomposition(const std::string& json_text);
std::string serialize_decomposition(const TreeDecomposition& D);

}  // namespace homlab

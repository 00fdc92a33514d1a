#pragma once

#include "homlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace homlab {

using Vertex = int;

/// Finite simple undirected graph on vertices 0..n-1.
/// Immutable once built; all operations below are pure functions.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    /// Edges as (min,max) pairs, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }

    std::span<const int> neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    int min_degree() const;
    bool has_edge(int u, int v) const;

    /// Number of common neighbors; codegree(v,v) == degree(v).
    int codegree(int u, int v) const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void add_edge_checked(int u, int v);

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

/// A homomorphism is stored as its image array: image[v] in V(G).
using Homomorphism = std::vector<int>;

bool is_homomorphism(const Graph& H, const Graph& G, const Homomorphism& h);

/// Symmetric matrix of exact rationals in [0,1]; diagonal entries allowed.
class WeightedGraph {
public:
    WeightedGraph(int n, std::vector<std::vector<Rat>> weights);

    int vertex_count() const { return n_; }
    const Rat& weight(int u, int v) const { return weights_[u][v]; }

private:
    int n_;
    std::vector<std::vector<Rat>> weights_;
};

// ---- named families ----

struct FamilySpec {
    std::string name;                 // complete, cycle, path, biclique, star, empty, gnp, file
    std::vector<std::string> params;  // raw parameter tokens
};

FamilySpec parse_family_spec(const std::string& text);
Graph build_named_graph(const FamilySpec& spec);
Graph build_named_graph(const std::string& spec);

Graph complete_graph(int k);
Graph cycle_graph(int n);       // n >= 3
Graph path_graph(int n);        // n vertices, n-1 edges
Graph biclique_graph(int s, int t);
Graph empty_graph(int n);

/// G(n,p): edge {u,v}, u<v, present iff the (u,v)-indexed counter draw
/// falls below p. Reproducible and order-independent for a fixed seed.
Graph gnp_graph(int n, const Rat& p, std::uint64_t seed);

// ---- constructions ----

/// Replace every edge by a length-2 path through a fresh vertex.
/// Original vertices keep their labels; vertex n+i belongs to edge i
/// in sorted edge order.
Graph subdivision(const Graph& H);

/// Replace every edge by a K_{2,t} whose 2-side is the edge's endpoints.
/// k2t_replacement(H,1) is exactly subdivision(H), same labeling.
Graph k2t_replacement(const Graph& H, int t);

/// Cartesian product; vertex (x1,x2) gets index x1*|V(H2)| + x2.
Graph cartesian_product(const Graph& H1, const Graph& H2);

/// Auxiliary graph on Hom(K,G): vertices enumerate Hom(K,G) in
/// lexicographic order of image arrays; h1 ~ h2 iff h1(v) ~ h2(v) in G
/// for every v of K. Empty Hom gives the empty graph.
Graph psi_graph(const Graph& K, const Graph& G);

std::optional<std::vector<int>> is_bipartite(const Graph& H);

/// Induced subgraph on the given vertices together with the old->new
/// relabeling (vertices are sorted ascending before relabeling).
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& G, std::vector<int> vertices);

bool is_connected(const Graph& G);
bool is_tree(const Graph& G);
std::vector<std::vector<int>> connected_components(const Graph& G);

/// Brute-force isomorphism test, intended for graphs up to ~12 vertices.
bool isomorphic(const Graph& A, const Graph& B);

// ---- edge-list text format ----
// First line "n m", then m lines "u v"; '#' starts a comment line.
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& G);

}  // namespace homlab

#pragma once

#include "homlab/graph.hpp"
#include "homlab/rational.hpp"
#include "homlab/treedecomp.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace homlab {

/// Finitely supported distribution over homomorphisms with exact
/// rational weights. Support is sorted lexicographically, probabilities
/// are positive and sum to exactly 1.
struct ExactDistribution {
    std::vector<Homomorphism> support;
    std::vector<Rat> prob;

    void validate() const;  // throws std::logic_error on violation
    std::optional<Rat> probability_of(const Homomorphism& h) const;
    bool operator==(const ExactDistribution& other) const {
        return support == other.support && prob == other.prob;
    }
};

/// Aggregates the distribution onto the given coordinates (in the given
/// order). Empty coords give the point mass on the empty tuple.
ExactDistribution pushforward(const ExactDistribution& dist, const std::vector<int>& coords);

/// Restricts to maps agreeing with `image` on `domain` and renormalizes.
/// Throws std::domain_error when nothing in the support agrees.
ExactDistribution restrict_and_renormalize(const ExactDistribution& dist,
                                           const std::vector<int>& domain,
                                           const std::vector<int>& image);

struct PartialEmbedding {
    std::vector<int> domain;  // vertex subset X of T, sorted
    std::vector<int> image;   // parallel images in V(G)
};

struct EmbedTrace {
    std::uint64_t seed = 0;
    std::uint64_t sample_index = 0;
    std::vector<int> vertex_order;  // order in which vertices were embedded
    std::vector<int> bag_order;     // composite case only
    Homomorphism result;
};

/// Probability that the T-indexed branching random walk on G produces h:
///   (1 / 2|E(G)|) * prod_v (1/deg_G(h(v)))^(deg_T(v) - 1).
/// Positive for every homomorphism as long as images have an incident edge.
Rat brw_prob(const Graph& T, const Graph& G, const Homomorphism& h);

/// The full walk distribution on Hom(T,G).
ExactDistribution brw_distribution(const Graph& T, const Graph& G,
                                   std::size_t max_support = 5'000'000);

/// One walk: root placed by the degree-proportional stationary law, each
/// child placed uniformly among its parent-image's neighbors. Vertices
/// are embedded in BFS order from vertex 0.
Homomorphism brw_sample(const Graph& T, const Graph& G, std::uint64_t seed,
                        std::uint64_t sample_index = 0);

/// sum of brw_prob over all extensions of h (defined on the subtree S)
/// to full homomorphisms T -> G.
Rat marginal_prob(const Graph& T, const std::vector<int>& S, const std::vector<int>& h_images,
                  const Graph& G, std::size_t max_support = 5'000'000);

/// Walk started from a partial embedding: the minimal enclosing subtree S
/// is drawn from the renormalized S-walk law restricted to extensions of
/// h, the rest extends by uniform neighbor steps.
ExactDistribution partial_brw_distribution(const Graph& T, const Graph& G,
                                           const PartialEmbedding& h,
                                           std::size_t max_support = 5'000'000);

Homomorphism partial_brw_sample(const Graph& T, const Graph& G, const PartialEmbedding& h,
                                std::uint64_t seed, std::uint64_t sample_index = 0);

/// Composite embedding of a strongly tree-decomposable H: bag by bag,
/// each one by a walk on the bag tree started from the already-embedded
/// intersection. Always outputs a homomorphism.
EmbedTrace std_embed_sample_traced(const Graph& H, const TreeDecomposition& D, const Graph& G,
                                   int root_bag, std::uint64_t seed,
                                   std::uint64_t sample_index = 0);

Homomorphism std_embed_sample(const Graph& H, const TreeDecomposition& D, const Graph& G,
                              int root_bag, std::uint64_t seed,
                              std::uint64_t sample_index = 0);

/// Exact law of the composite embedding, computed from the closed-form
/// factorization over parent-child bag pairs. The law is invariant under
/// the root choice and any admissible bag order; passing orders is how
/// tests exercise that invariance.
ExactDistribution std_embed_distribution(const Graph& H, const TreeDecomposition& D,
                                         const Graph& G, int root_bag,
                                         std::size_t max_support = 5'000'000);

ExactDistribution std_embed_distribution(const Graph& H, const TreeDecomposition& D,
                                         const Graph& G, const std::vector<int>& bag_order,
                                         std::size_t max_support = 5'000'000);

/// Admissible bag orders start at the root and stay connected in the bag
/// tree (no child before its parent).
std::vector<int> default_bag_order(const TreeDecomposition& D, int root_bag);

}  // namespace homlab

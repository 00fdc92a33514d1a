#include "homlab/brw.hpp"

#include "homlab/errors.hpp"
#include "homlab/hom.hpp"
#include "homlab/rng.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <stdexcept>

namespace homlab {

namespace {

void require_tree(const Graph& T) {
    if (!is_tree(T)) throw std::invalid_argument("expected a tree");
}

void require_edge(const Graph& G) {
    if (G.edge_count() < 1) throw std::invalid_argument("G has no edge");
}

// Eq-style closed form with per-vertex tree degrees supplied by the caller;
// images[i] is the G-image of the vertex whose tree degree is degs[i].
Rat prob_from_degrees(const Graph& G, const std::vector<int>& degs,
                      const std::vector<int>& images) {
    Rat p{1, BigInt{2} * G.edge_count()};
    for (std::size_t i = 0; i < degs.size(); ++i) {
        const int gdeg = G.degree(images[i]);
        const long exponent = degs[i] - 1;
        if (gdeg == 0) {
            if (exponent >= 0) continue;  // (1/0)^0 never occurs; exponent<0 means weight deg
            return Rat{0};
        }
        p *= rat_pow(Rat{1, gdeg}, exponent);
    }
    return p;
}

// BFS order of T from root, neighbors ascending; parent[] alongside.
std::pair<std::vector<int>, std::vector<int>> bfs_order(const Graph& T, int root) {
    std::vector<int> order{root}, parent(T.vertex_count(), -1);
    std::vector<char> seen(T.vertex_count(), 0);
    seen[root] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int u : T.neighbors(order[i]))
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = order[i];
                order.push_back(u);
            }
    return {order, parent};
}

// BFS forest rooted at the whole set S: every vertex outside S gets the
// parent through which it is first reached.
std::vector<int> parents_from_set(const Graph& T, const std::vector<int>& S) {
    std::vector<int> parent(T.vertex_count(), -1);
    std::vector<char> seen(T.vertex_count(), 0);
    std::queue<int> q;
    for (int s : S) {
        seen[s] = 1;
        q.push(s);
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : T.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = v;
                q.push(u);
            }
    }
    return parent;
}

std::vector<int> restrict_to(const Homomorphism& h, const std::vector<int>& coords) {
    std::vector<int> out(coords.size());
    for (std::size_t i = 0; i < coords.size(); ++i) out[i] = h[coords[i]];
    return out;
}

}  // namespace

void ExactDistribution::validate() const {
    if (support.size() != prob.size()) throw std::logic_error("distribution arity mismatch");
    Rat total{0};
    for (const Rat& p : prob) {
        if (p <= 0) throw std::logic_error("nonpositive probability on support");
        total += p;
    }
    if (total != 1) throw std::logic_error("distribution does not sum to 1");
    if (!std::is_sorted(support.begin(), support.end()))
        throw std::logic_error("support not sorted");
}

std::optional<Rat> ExactDistribution::probability_of(const Homomorphism& h) const {
    const auto it = std::lower_bound(support.begin(), support.end(), h);
    if (it == support.end() || *it != h) return std::nullopt;
    return prob[static_cast<std::size_t>(it - support.begin())];
}

ExactDistribution pushforward(const ExactDistribution& dist, const std::vector<int>& coords) {
    std::map<std::vector<int>, Rat> acc;
    for (std::size_t i = 0; i < dist.support.size(); ++i)
        acc[restrict_to(dist.support[i], coords)] += dist.prob[i];
    ExactDistribution out;
    for (auto& [key, p] : acc) {
        out.support.push_back(key);
        out.prob.push_back(p);
    }
    return out;
}

ExactDistribution restrict_and_renormalize(const ExactDistribution& dist,
                                           const std::vector<int>& domain,
                                           const std::vector<int>& image) {
    ExactDistribution out;
    Rat total{0};
    for (std::size_t i = 0; i < dist.support.size(); ++i) {
        if (restrict_to(dist.support[i], domain) != image) continue;
        out.support.push_back(dist.support[i]);
        out.prob.push_back(dist.prob[i]);
        total += dist.prob[i];
    }
    if (total == 0) throw std::domain_error("restriction has empty support");
    for (Rat& p : out.prob) p /= total;
    return out;
}

Rat brw_prob(const Graph& T, const Graph& G, const Homomorphism& h) {
    require_tree(T);
    require_edge(G);
    if (!is_homomorphism(T, G, h)) throw std::invalid_argument("h is not a homomorphism");
    std::vector<int> degs(T.vertex_count());
    for (int v = 0; v < T.vertex_count(); ++v) degs[v] = T.degree(v);
    return prob_from_degrees(G, degs, h);
}

ExactDistribution brw_distribution(const Graph& T, const Graph& G, std::size_t max_support) {
    require_tree(T);
    require_edge(G);
    ExactDistribution dist;
    for (auto& h : enumerate_homomorphisms(T, G, max_support)) {
        const Rat p = brw_prob(T, G, h);
        if (p == 0) continue;  // single-vertex T mapped to an isolated vertex
        dist.support.push_back(std::move(h));
        dist.prob.push_back(p);
    }
    dist.validate();
    return dist;
}

namespace {

Homomorphism brw_sample_with(const Graph& T, const Graph& G, CounterRng& rng) {
    const auto [order, parent] = bfs_order(T, 0);
    Homomorphism image(T.vertex_count(), -1);
    std::vector<Rat> stationary(G.vertex_count());
    for (int v = 0; v < G.vertex_count(); ++v)
        stationary[v] = Rat{G.degree(v), BigInt{2} * G.edge_count()};
    image[order[0]] = static_cast<int>(sample_exact(stationary, rng));
    for (std::size_t i = 1; i < order.size(); ++i) {
        const int v = order[i];
        const auto nbrs = G.neighbors(image[parent[v]]);
        image[v] = nbrs[rng.uniform_below(nbrs.size())];
    }
    return image;
}

}  // namespace

Homomorphism brw_sample(const Graph& T, const Graph& G, std::uint64_t seed,
                        std::uint64_t sample_index) {
    require_tree(T);
    require_edge(G);
    CounterRng rng(seed, sample_index);
    return brw_sample_with(T, G, rng);
}

Rat marginal_prob(const Graph& T, const std::vector<int>& S, const std::vector<int>& h_images,
                  const Graph& G, std::size_t max_support) {
    require_tree(T);
    require_edge(G);
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    auto [sub, verts] = induced_subgraph(T, sorted);
    if (!is_tree(sub)) throw std::invalid_argument("S does not induce a subtree");
    if (S.size() != h_images.size()) throw std::invalid_argument("h arity mismatch");

    // align images with the sorted vertex order
    std::vector<int> image(sorted.size());
    for (std::size_t i = 0; i < S.size(); ++i) {
        const auto pos = std::lower_bound(sorted.begin(), sorted.end(), S[i]) - sorted.begin();
        image[static_cast<std::size_t>(pos)] = h_images[i];
    }
    if (!is_homomorphism(sub, G, image))
        throw std::invalid_argument("h is not a homomorphism on T[S]");

    Rat total{0};
    for (const auto& g : enumerate_homomorphisms(T, G, max_support))
        if (restrict_to(g, sorted) == image) total += brw_prob(T, G, g);
    return total;
}

namespace {

struct PartialLaw {
    std::vector<int> subtree;             // S, sorted
    Graph subtree_graph;                  // T[S] relabeled
    std::vector<Homomorphism> s_homs;     // Hom(T[S], G)
    std::vector<Rat> s_probs;             // p_S per element
    std::vector<Rat> filtered_weights;    // p_S, zeroed outside extensions of h
    Rat normalizer;                       // sum of p_S over extensions of h
    std::vector<int> parent;              // BFS forest from S over T
};

PartialLaw build_partial_law(const Graph& T, const Graph& G, const PartialEmbedding& h,
                             std::size_t max_support) {
    require_tree(T);
    require_edge(G);
    if (h.domain.size() != h.image.size())
        throw std::invalid_argument("partial embedding arity mismatch");
    for (std::size_t i = 0; i < h.domain.size(); ++i) {
        if (h.domain[i] < 0 || h.domain[i] >= T.vertex_count())
            throw std::invalid_argument("partial embedding domain out of range");
        if (h.image[i] < 0 || h.image[i] >= G.vertex_count())
            throw std::invalid_argument("partial embedding image out of range");
    }
    // respect any T-edges inside the domain
    for (std::size_t i = 0; i < h.domain.size(); ++i)
        for (std::size_t j = i + 1; j < h.domain.size(); ++j)
            if (T.has_edge(h.domain[i], h.domain[j]) && !G.has_edge(h.image[i], h.image[j]))
                throw std::invalid_argument("partial embedding violates an edge");

    PartialLaw law;
    law.subtree = minimal_subtree(T, h.domain);
    auto [sub, verts] = induced_subgraph(T, law.subtree);
    law.subtree_graph = std::move(sub);

    std::vector<int> degs(law.subtree.size());
    for (std::size_t i = 0; i < law.subtree.size(); ++i)
        degs[i] = law.subtree_graph.degree(static_cast<int>(i));

    // positions of the domain inside the sorted subtree
    std::vector<std::pair<std::size_t, int>> anchor;  // (position in S, required image)
    for (std::size_t i = 0; i < h.domain.size(); ++i) {
        const auto pos = std::lower_bound(law.subtree.begin(), law.subtree.end(), h.domain[i]) -
                         law.subtree.begin();
        anchor.emplace_back(static_cast<std::size_t>(pos), h.image[i]);
    }

    law.s_homs = enumerate_homomorphisms(law.subtree_graph, G, max_support);
    law.normalizer = 0;
    for (const auto& y : law.s_homs) {
        law.s_probs.push_back(prob_from_degrees(G, degs, y));
        bool agrees = true;
        for (auto [pos, img] : anchor)
            if (y[pos] != img) {
                agrees = false;
                break;
            }
        law.filtered_weights.push_back(agrees ? law.s_probs.back() : Rat{0});
        if (agrees) law.normalizer += law.s_probs.back();
    }
    if (law.normalizer == 0)
        throw std::domain_error("no walk starts from this partial embedding");
    law.parent = parents_from_set(T, law.subtree);
    return law;
}

}  // namespace

ExactDistribution partial_brw_distribution(const Graph& T, const Graph& G,
                                           const PartialEmbedding& h, std::size_t max_support) {
    const PartialLaw law = build_partial_law(T, G, h, max_support);
    std::map<std::vector<int>, Rat> s_weight;
    for (std::size_t i = 0; i < law.s_homs.size(); ++i) s_weight[law.s_homs[i]] = law.s_probs[i];

    ExactDistribution dist;
    for (const auto& g : enumerate_homomorphisms(T, G, max_support)) {
        bool agrees = true;
        for (std::size_t i = 0; i < h.domain.size() && agrees; ++i)
            agrees = g[h.domain[i]] == h.image[i];
        if (!agrees) continue;
        // weight of the restriction to S, then one uniform step per vertex outside S
        Rat p = s_weight.at(restrict_to(g, law.subtree)) / law.normalizer;
        for (int v = 0; v < T.vertex_count(); ++v)
            if (law.parent[v] != -1) p *= Rat{1, G.degree(g[law.parent[v]])};
        if (p == 0) continue;
        dist.support.push_back(g);
        dist.prob.push_back(p);
    }
    dist.validate();
    return dist;
}

namespace {

Homomorphism partial_brw_sample_with(const Graph& T, const Graph& G, const PartialEmbedding& h,
                                     CounterRng& rng) {
    const PartialLaw law = build_partial_law(T, G, h, /*max_support=*/5'000'000);

    Homomorphism image(T.vertex_count(), -1);
    const auto& pick = law.s_homs[sample_exact(law.filtered_weights, rng)];
    for (std::size_t i = 0; i < law.subtree.size(); ++i) image[law.subtree[i]] = pick[i];

    // extend outward in BFS order from S
    std::vector<int> order;
    std::vector<char> seen(T.vertex_count(), 0);
    std::queue<int> q;
    for (int s : law.subtree) {
        seen[s] = 1;
        q.push(s);
    }
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : T.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                order.push_back(u);
                q.push(u);
            }
    }
    for (int v : order) {
        const auto nbrs = G.neighbors(image[law.parent[v]]);
        image[v] = nbrs[rng.uniform_below(nbrs.size())];
    }
    return image;
}

}  // namespace

Homomorphism partial_brw_sample(const Graph& T, const Graph& G, const PartialEmbedding& h,
                                std::uint64_t seed, std::uint64_t sample_index) {
    CounterRng rng(seed, sample_index);
    return partial_brw_sample_with(T, G, h, rng);
}

std::vector<int> default_bag_order(const TreeDecomposition& D, int root_bag) {
    const int B = static_cast<int>(D.bags.size());
    if (root_bag < 0 || root_bag >= B) throw std::invalid_argument("root bag out of range");
    std::vector<std::vector<int>> adj(B);
    for (auto [x, y] : D.tree_edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    std::vector<int> order{root_bag};
    std::vector<char> seen(B, 0);
    seen[root_bag] = 1;
    for (std::size_t i = 0; i < order.size(); ++i)
        for (int y : adj[order[i]])
            if (!seen[y]) {
                seen[y] = 1;
                order.push_back(y);
            }
    return order;
}

namespace {

struct CompositeLaw {
    std::vector<int> bag_order;
    // per ordered bag: anchors into the already-explored region, minimal
    // subtree around them, induced degrees, and the normalizer table
    struct BagStep {
        std::vector<int> bag;
        std::vector<int> anchors;          // sorted vertices shared with the prefix
        std::vector<int> subtree;          // S_i, sorted
        std::vector<int> bag_degrees;      // degrees within H[bag], by sorted bag position
        std::map<std::vector<int>, Rat> normalizer;  // anchor images -> total weight
    };
    std::vector<BagStep> steps;
};

CompositeLaw build_composite_law(const Graph& H, const TreeDecomposition& D, const Graph& G,
                                 const std::vector<int>& bag_order, std::size_t max_support) {
    require_edge(G);
    const auto diag = validate_strong(H, D);
    if (!diag.valid()) throw std::invalid_argument("not a valid strong tree decomposition");
    const int B = static_cast<int>(D.bags.size());
    if (static_cast<int>(bag_order.size()) != B)
        throw std::invalid_argument("bag order must mention every bag once");
    {
        std::vector<char> seen(B, 0);
        for (int b : bag_order) {
            if (b < 0 || b >= B || seen[b]) throw std::invalid_argument("bad bag order");
            seen[b] = 1;
        }
        // prefix-connectivity in the bag tree = no child before its parent
        std::vector<char> placed(B, 0);
        placed[bag_order[0]] = 1;
        for (std::size_t i = 1; i < bag_order.size(); ++i) {
            bool linked = false;
            for (auto [x, y] : D.tree_edges) {
                if ((x == bag_order[i] && placed[y]) || (y == bag_order[i] && placed[x]))
                    linked = true;
            }
            if (!linked) throw std::invalid_argument("bag order is not admissible");
            placed[bag_order[i]] = 1;
        }
    }

    CompositeLaw law;
    law.bag_order = bag_order;
    std::vector<char> explored(H.vertex_count(), 0);
    for (std::size_t i = 0; i < bag_order.size(); ++i) {
        CompositeLaw::BagStep step;
        step.bag = D.bags[bag_order[i]];
        for (int v : step.bag)
            if (explored[v]) step.anchors.push_back(v);
        auto [bag_graph, bag_verts] = induced_subgraph(H, step.bag);
        step.bag_degrees.resize(step.bag.size());
        for (std::size_t j = 0; j < step.bag.size(); ++j)
            step.bag_degrees[j] = bag_graph.degree(static_cast<int>(j));

        if (i > 0) {
            step.subtree = minimal_subtree_within(H, step.bag, step.anchors);
            // normalizer per anchor assignment: total S-walk weight of the
            // extensions of that assignment
            auto [sub, sub_verts] = induced_subgraph(H, step.subtree);
            std::vector<int> sub_degs(step.subtree.size());
            for (std::size_t j = 0; j < step.subtree.size(); ++j)
                sub_degs[j] = sub.degree(static_cast<int>(j));
            std::vector<std::size_t> anchor_pos;
            for (int a : step.anchors)
                anchor_pos.push_back(static_cast<std::size_t>(
                    std::lower_bound(step.subtree.begin(), step.subtree.end(), a) -
                    step.subtree.begin()));
            for (const auto& y : enumerate_homomorphisms(sub, G, max_support)) {
                std::vector<int> key(anchor_pos.size());
                for (std::size_t j = 0; j < anchor_pos.size(); ++j) key[j] = y[anchor_pos[j]];
                step.normalizer[key] += prob_from_degrees(G, sub_degs, y);
            }
        }
        for (int v : step.bag) explored[v] = 1;
        law.steps.push_back(std::move(step));
    }
    return law;
}

}  // namespace

ExactDistribution std_embed_distribution(const Graph& H, const TreeDecomposition& D,
                                         const Graph& G, const std::vector<int>& bag_order,
                                         std::size_t max_support) {
    const CompositeLaw law = build_composite_law(H, D, G, bag_order, max_support);
    ExactDistribution dist;
    for (const auto& h : enumerate_homomorphisms(H, G, max_support)) {
        Rat p{1};
        for (std::size_t i = 0; i < law.steps.size() && p != 0; ++i) {
            const auto& step = law.steps[i];
            p *= prob_from_degrees(G, step.bag_degrees, restrict_to(h, step.bag));
            if (p != 0 && i > 0) p /= step.normalizer.at(restrict_to(h, step.anchors));
        }
        if (p == 0) continue;  // only isolated-vertex images; never produced by the walk
        dist.support.push_back(h);
        dist.prob.push_back(p);
    }
    dist.validate();
    return dist;
}

ExactDistribution std_embed_distribution(const Graph& H, const TreeDecomposition& D,
                                         const Graph& G, int root_bag, std::size_t max_support) {
    return std_embed_distribution(H, D, G, default_bag_order(D, root_bag), max_support);
}

EmbedTrace std_embed_sample_traced(const Graph& H, const TreeDecomposition& D, const Graph& G,
                                   int root_bag, std::uint64_t seed, std::uint64_t sample_index) {
    require_edge(G);
    const auto diag = validate_strong(H, D);
    if (!diag.valid()) throw std::invalid_argument("not a valid strong tree decomposition");

    EmbedTrace trace;
    trace.seed = seed;
    trace.sample_index = sample_index;
    trace.bag_order = default_bag_order(D, root_bag);
    CounterRng rng(seed, sample_index);

    Homomorphism image(H.vertex_count(), -1);
    std::vector<char> explored(H.vertex_count(), 0);
    for (std::size_t i = 0; i < trace.bag_order.size(); ++i) {
        const auto& bag = D.bags[trace.bag_order[i]];
        auto [bag_graph, bag_verts] = induced_subgraph(H, bag);
        PartialEmbedding anchors;
        for (std::size_t j = 0; j < bag_verts.size(); ++j) {
            if (explored[bag_verts[j]]) {
                anchors.domain.push_back(static_cast<int>(j));
                anchors.image.push_back(image[bag_verts[j]]);
            }
        }
        Homomorphism bag_image;
        if (anchors.domain.empty()) {
            bag_image = brw_sample_with(bag_graph, G, rng);
        } else {
            bag_image = partial_brw_sample_with(bag_graph, G, anchors, rng);
        }
        for (std::size_t j = 0; j < bag_verts.size(); ++j) {
            if (!explored[bag_verts[j]]) {
                image[bag_verts[j]] = bag_image[j];
                explored[bag_verts[j]] = 1;
                trace.vertex_order.push_back(bag_verts[j]);
            }
        }
    }
    trace.result = std::move(image);
    return trace;
}

Homomorphism std_embed_sample(const Graph& H, const TreeDecomposition& D, const Graph& G,
                              int root_bag, std::uint64_t seed, std::uint64_t sample_index) {
    return std_embed_sample_traced(H, D, G, root_bag, seed, sample_index).result;
}

}  // namespace homlab

#include "homlab/entropy.hpp"

#include "homlab/hom.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace homlab {

namespace {

double entropy_of_probs(const std::vector<Rat>& probs) {
    double h = 0;
    for (const Rat& p : probs) {
        if (p == 0) continue;
        const double pd = p.convert_to<double>();
        h -= pd * std::log(pd);
    }
    return h;
}

double log_big(const BigInt& value) {
    // log of a positive big integer via its bit length
    if (value <= 0) throw std::domain_error("log of nonpositive value");
    const unsigned bits = boost::multiprecision::msb(value);
    if (bits <= 900) return std::log(value.convert_to<double>());
    const BigInt shifted = value >> (bits - 64);
    return std::log(shifted.convert_to<double>()) + static_cast<double>(bits - 64) * std::log(2.0);
}

}  // namespace

double entropy(const ExactDistribution& dist) {
    dist.validate();
    return entropy_of_probs(dist.prob);
}

double conditional_entropy(const ExactDistribution& dist, const std::vector<int>& coords_x,
                           const std::vector<int>& coords_y) {
    std::vector<int> joint = coords_x;
    joint.insert(joint.end(), coords_y.begin(), coords_y.end());
    std::sort(joint.begin(), joint.end());
    joint.erase(std::unique(joint.begin(), joint.end()), joint.end());
    return entropy(pushforward(dist, joint)) - entropy(pushforward(dist, coords_x));
}

TreeEntropyReport tree_entropy_bound(const Graph& T, const Graph& G, std::size_t max_support) {
    const auto dist = brw_distribution(T, G, max_support);
    const int n = G.vertex_count();
    const int v = T.vertex_count();
    const int e = T.edge_count();
    const double log_n = std::log(static_cast<double>(n));
    const double log_2m = std::log(2.0 * G.edge_count());

    TreeEntropyReport report;
    report.entropy_value = entropy(dist);
    report.lower_bound = v * log_n + e * (log_2m - 2 * log_n);
    report.slack = report.entropy_value - report.lower_bound;
    report.components.push_back({"entropy", report.entropy_value});
    report.components.push_back({"lower_bound", report.lower_bound});

    double edge_sum = 0;
    bool edges_ok = true;
    for (auto [a, b] : T.edges()) {
        const double he = entropy(pushforward(dist, {a, b}));
        edge_sum += he;
        if (std::abs(he - log_2m) > kEntropyTol) edges_ok = false;
        report.components.push_back({"edge_entropy(" + std::to_string(a) + "," + std::to_string(b) + ")", he});
    }
    report.edge_marginal_identity = edges_ok && std::abs(edge_sum - e * log_2m) <= kEntropyTol * (1 + e);

    double vertex_sum = 0;
    for (int u = 0; u < v; ++u)
        vertex_sum += (T.degree(u) - 1) * entropy(pushforward(dist, {u}));
    report.vertex_entropy_bound = vertex_sum <= (2.0 * e - v) * log_n + kEntropyTol;
    report.components.push_back({"weighted_vertex_entropy", vertex_sum});
    return report;
}

ChainEntropyReport std_entropy_chain(const Graph& H, const TreeDecomposition& D, const Graph& G,
                                     int root_bag, std::size_t max_support) {
    const auto dist = std_embed_distribution(H, D, G, root_bag, max_support);
    const int n = G.vertex_count();
    const double log_n = std::log(static_cast<double>(n));
    const double log_2m = std::log(2.0 * G.edge_count());

    ChainEntropyReport report;
    report.entropy_value = entropy(dist);
    report.lower_bound =
        H.vertex_count() * log_n + H.edge_count() * (log_2m - 2 * log_n);
    report.slack = report.entropy_value - report.lower_bound;
    report.components.push_back({"entropy", report.entropy_value});
    report.components.push_back({"lower_bound", report.lower_bound});

    double bag_sum = 0;
    int bag_edges = 0, bag_vertices = 0;
    report.bag_bounds = true;
    for (std::size_t i = 0; i < D.bags.size(); ++i) {
        const auto& bag = D.bags[i];
        const auto [bag_graph, verts] = induced_subgraph(H, bag);
        const double hx = entropy(pushforward(dist, bag));
        const double bound = static_cast<double>(bag.size()) * log_n +
                             bag_graph.edge_count() * (log_2m - 2 * log_n);
        if (hx < bound - kEntropyTol) report.bag_bounds = false;
        bag_sum += hx;
        bag_edges += bag_graph.edge_count();
        bag_vertices += static_cast<int>(bag.size());
        report.components.push_back({"bag_entropy[" + std::to_string(i) + "]", hx});
    }

    double cut_sum = 0;
    int cut_vertices = 0;
    report.intersection_bounds = true;
    for (auto [x, y] : D.tree_edges) {
        std::vector<int> common;
        std::set_intersection(D.bags[x].begin(), D.bags[x].end(), D.bags[y].begin(),
                              D.bags[y].end(), std::back_inserter(common));
        const double hc = entropy(pushforward(dist, common));
        if (hc > static_cast<double>(common.size()) * log_n + kEntropyTol)
            report.intersection_bounds = false;
        cut_sum += hc;
        cut_vertices += static_cast<int>(common.size());
        report.components.push_back(
            {"cut_entropy[" + std::to_string(x) + "," + std::to_string(y) + "]", hc});
    }

    report.telescoping =
        std::abs(report.entropy_value - (bag_sum - cut_sum)) <= kEntropyTol * (1 + D.bags.size());
    report.counting_edges = bag_edges == H.edge_count();
    report.counting_vertices = bag_vertices - cut_vertices == H.vertex_count();
    report.hom_log_bound =
        report.entropy_value <= log_big(count_homomorphisms(H, G)) + kEntropyTol;
    return report;
}

}  // namespace homlab

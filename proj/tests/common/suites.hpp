#pragma once

// Instance suites for property sweeps: every graph / connected graph /
// tree up to a size bound, one representative per isomorphism class.

#include "homlab/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace homlab::testing {

namespace detail {

inline std::vector<Graph> graphs_on(int n, bool connected_only) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const int m = static_cast<int>(slots.size());

    std::vector<std::vector<int>> slot_index(n, std::vector<int>(n, -1));
    for (int i = 0; i < m; ++i) {
        slot_index[slots[i].first][slots[i].second] = i;
        slot_index[slots[i].second][slots[i].first] = i;
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> slot_perms;
    do {
        std::vector<int> sp(m);
        for (int i = 0; i < m; ++i) sp[i] = slot_index[perm[slots[i].first]][perm[slots[i].second]];
        slot_perms.push_back(std::move(sp));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool lex_min = true;
        for (const auto& sp : slot_perms) {
            std::uint32_t image = 0;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) image |= 1u << sp[i];
            if (image < mask) {
                lex_min = false;
                break;
            }
        }
        if (!lex_min) continue;
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) edges.push_back(slots[i]);
        Graph g(n, edges);
        if (connected_only && !is_connected(g)) continue;
        out.push_back(std::move(g));
    }
    return out;
}

inline std::string ahu_code(const Graph& T, int v, int parent) {
    std::vector<std::string> children;
    for (int u : T.neighbors(v))
        if (u != parent) children.push_back(ahu_code(T, u, v));
    std::sort(children.begin(), children.end());
    std::string code = "(";
    for (const auto& c : children) code += c;
    return code + ")";
}

inline std::string tree_canonical(const Graph& T) {
    // centers via leaf stripping
    const int n = T.vertex_count();
    if (n == 1) return "()";
    std::vector<int> degree(n), layer;
    for (int v = 0; v < n; ++v) {
        degree[v] = T.degree(v);
        if (degree[v] <= 1) layer.push_back(v);
    }
    int remaining = n;
    std::vector<int> centers = layer;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int u : T.neighbors(v))
                if (--degree[u] == 1) next.push_back(u);
        layer = next;
        centers = layer;
    }
    std::string best;
    for (int c : centers) {
        std::string code = ahu_code(T, c, -1);
        if (best.empty() || code < best) best = code;
    }
    return best;
}

inline std::vector<Graph> trees_on(int n) {
    if (n == 1) return {Graph(1)};
    if (n == 2) return {Graph(2, {{0, 1}})};
    std::vector<Graph> out;
    std::set<std::string> seen;
    std::vector<int> seq(n - 2, 0);
    for (;;) {
        // decode the Pruefer sequence
        std::vector<int> degree(n, 1);
        for (int x : seq) ++degree[x];
        std::set<int> leaves;
        for (int v = 0; v < n; ++v)
            if (degree[v] == 1) leaves.insert(v);
        std::vector<std::pair<int, int>> edges;
        for (int x : seq) {
            const int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            if (--degree[x] == 1) leaves.insert(x);
        }
        edges.emplace_back(*leaves.begin(), *std::next(leaves.begin()));
        Graph tree(n, edges);
        if (seen.insert(tree_canonical(tree)).second) out.push_back(std::move(tree));

        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

}  // namespace detail

/// All graphs with 1..max_n vertices, one per isomorphism class.
inline const std::vector<Graph>& all_graphs_upto(int max_n) {
    static std::map<int, std::vector<Graph>> cache;
    auto& entry = cache[max_n];
    if (entry.empty()) {
        for (int n = 1; n <= max_n; ++n)
            for (auto& g : detail::graphs_on(n, false)) entry.push_back(std::move(g));
    }
    return entry;
}

inline const std::vector<Graph>& connected_graphs_upto(int max_n) {
    static std::map<int, std::vector<Graph>> cache;
    auto& entry = cache[max_n];
    if (entry.empty()) {
        for (int n = 1; n <= max_n; ++n)
            for (auto& g : detail::graphs_on(n, true)) entry.push_back(std::move(g));
    }
    return entry;
}

inline const std::vector<Graph>& trees_upto(int max_n) {
    static std::map<int, std::vector<Graph>> cache;
    auto& entry = cache[max_n];
    if (entry.empty()) {
        for (int n = 1; n <= max_n; ++n)
            for (auto& t : detail::trees_on(n)) entry.push_back(std::move(t));
    }
    return entry;
}

}  // namespace homlab::testing

#pragma once

// Test-only reference implementations, kept independent of the library's
// counting kernels: plain odometer enumeration over all vertex maps.

#include "homlab/graph.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace homlab::testing {

inline std::uint64_t oracle_count_homomorphisms(const Graph& H, const Graph& G) {
    const int h = H.vertex_count();
    const int n = G.vertex_count();
    if (h == 0) return 1;
    if (n == 0) return 0;
    if (h * std::log(static_cast<double>(n)) > std::log(3.0e8))
        throw std::invalid_argument("oracle instance too large");
    std::vector<int> x(h, 0);
    std::uint64_t count = 0;
    for (;;) {
        bool ok = true;
        for (auto [u, v] : H.edges())
            if (!G.has_edge(x[u], x[v])) {
                ok = false;
                break;
            }
        count += ok;
        int i = 0;
        while (i < h && ++x[i] == n) x[i++] = 0;
        if (i == h) break;
    }
    return count;
}

inline int oracle_codegree(const Graph& G, int u, int v) {
    int count = 0;
    for (int w = 0; w < G.vertex_count(); ++w)
        if (G.has_edge(u, w) && G.has_edge(v, w)) ++count;
    return count;
}

inline Graph disjoint_union(const Graph& A, const Graph& B) {
    std::vector<std::pair<int, int>> edges = A.edges();
    for (auto [u, v] : B.edges())
        edges.emplace_back(u + A.vertex_count(), v + A.vertex_count());
    return Graph(A.vertex_count() + B.vertex_count(), edges);
}

}  // namespace homlab::testing

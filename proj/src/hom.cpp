#include "homlab/hom.hpp"

#include "homlab/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace homlab {

namespace {

struct Overflow {};

inline std::uint64_t add_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}

inline std::uint64_t mul_checked(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}

struct BitRows {
    int n = 0;
    int words = 0;
    std::vector<std::vector<std::uint64_t>> row;
    std::vector<std::uint64_t> full;

    explicit BitRows(const Graph& G) : n(G.vertex_count()), words((n + 63) / 64) {
        row.assign(n, std::vector<std::uint64_t>(words, 0));
        for (auto [u, v] : G.edges()) {
            row[u][v / 64] |= std::uint64_t{1} << (v % 64);
            row[v][u / 64] |= std::uint64_t{1} << (u % 64);
        }
        full.assign(words, 0);
        for (int v = 0; v < n; ++v) full[v / 64] |= std::uint64_t{1} << (v % 64);
    }
};

// Assignment order inside one connected component of H: start from a
// maximum-degree vertex, then repeatedly take the vertex with the most
// already-ordered neighbors (ties: higher degree, then lower index).
std::vector<int> component_order(const Graph& H, const std::vector<int>& comp) {
    std::vector<int> order;
    std::vector<char> placed(H.vertex_count(), 0);
    int first = comp[0];
    for (int v : comp)
        if (H.degree(v) > H.degree(first)) first = v;
    order.push_back(first);
    placed[first] = 1;
    while (order.size() < comp.size()) {
        int best = -1, best_links = -1;
        for (int v : comp) {
            if (placed[v]) continue;
            int links = 0;
            for (int u : H.neighbors(v)) links += placed[u];
            if (links > best_links ||
                (links == best_links && (H.degree(v) > H.degree(best) ||
                                         (H.degree(v) == H.degree(best) && v < best)))) {
                best = v;
                best_links = links;
            }
        }
        order.push_back(best);
        placed[best] = 1;
    }
    return order;
}

template <typename Acc>
class ComponentCounter {
public:
    ComponentCounter(const Graph& H, const BitRows& g, const std::vector<int>& order)
        : g_(g), size_(static_cast<int>(order.size())) {
        earlier_.resize(size_);
        branch_.assign(size_, 0);
        std::vector<int> pos_of(H.vertex_count(), -1);
        for (int i = 0; i < size_; ++i) pos_of[order[i]] = i;
        for (int i = 0; i < size_; ++i) {
            for (int u : H.neighbors(order[i])) {
                const int j = pos_of[u];
                if (j < i) earlier_[i].push_back(j);
                else if (j > i) branch_[i] = 1;  // a later neighbor: image matters
            }
        }
        image_.assign(size_, 0);
        cand_.assign(size_, std::vector<std::uint64_t>(g.words, 0));
    }

    Acc count() { return go(0); }

private:
    Acc go(int pos) {
        if (pos == size_) return Acc{1};
        auto& cand = cand_[pos];
        if (earlier_[pos].empty()) {
            cand = g_.full;
        } else {
            cand = g_.row[image_[earlier_[pos][0]]];
            for (std::size_t k = 1; k < earlier_[pos].size(); ++k)
                for (int w = 0; w < g_.words; ++w)
                    cand[w] &= g_.row[image_[earlier_[pos][k]]][w];
        }
        if (!branch_[pos]) {
            std::uint64_t choices = 0;
            for (int w = 0; w < g_.words; ++w) choices += static_cast<std::uint64_t>(__builtin_popcountll(cand[w]));
            if (choices == 0) return Acc{0};
            return mul(Acc(static_cast<long long>(choices)), go(pos + 1));
        }
        Acc total{0};
        for (int w = 0; w < g_.words; ++w) {
            std::uint64_t bits = cand[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                image_[pos] = w * 64 + b;
                total = add(total, go(pos + 1));
            }
        }
        return total;
    }

    static Acc add(const Acc& a, const Acc& b) {
        if constexpr (std::is_same_v<Acc, std::uint64_t>) return add_checked(a, b);
        else return a + b;
    }
    static Acc mul(const Acc& a, const Acc& b) {
        if constexpr (std::is_same_v<Acc, std::uint64_t>) return mul_checked(a, b);
        else return a * b;
    }

    const BitRows& g_;
    int size_;
    std::vector<std::vector<int>> earlier_;
    std::vector<char> branch_;
    std::vector<int> image_;
    std::vector<std::vector<std::uint64_t>> cand_;
};

}  // namespace

BigInt count_homomorphisms(const Graph& H, const Graph& G) {
    if (H.vertex_count() == 0) return 1;
    if (G.vertex_count() == 0) return 0;
    const BitRows rows(G);
    BigInt total{1};
    for (const auto& comp : connected_components(H)) {
        const auto order = component_order(H, comp);
        BigInt part;
        try {
            ComponentCounter<std::uint64_t> counter(H, rows, order);
            part = counter.count();
        } catch (const Overflow&) {
            ComponentCounter<BigInt> counter(H, rows, order);
            part = counter.count();
        }
        if (part == 0) return 0;
        total *= part;
    }
    return total;
}

std::vector<Homomorphism> enumerate_homomorphisms(const Graph& H, const Graph& G,
                                                  std::size_t max_results) {
    const int nH = H.vertex_count();
    const int nG = G.vertex_count();
    std::vector<Homomorphism> out;
    if (nH == 0) {
        out.push_back({});
        return out;
    }
    if (nG == 0) return out;

    std::vector<std::vector<int>> earlier(nH);
    for (auto [u, v] : H.edges()) earlier[std::max(u, v)].push_back(std::min(u, v));

    Homomorphism image(nH, -1);
    auto recurse = [&](auto&& self, int v) -> void {
        if (v == nH) {
            if (out.size() >= max_results)
                throw BudgetExceeded("homomorphism enumeration exceeded " + std::to_string(max_results));
            out.push_back(image);
            return;
        }
        if (earlier[v].empty()) {
            for (int g = 0; g < nG; ++g) {
                image[v] = g;
                self(self, v + 1);
            }
        } else {
            // candidates: common neighbors of the already-assigned endpoints
            const auto base = G.neighbors(image[earlier[v][0]]);
            for (int g : base) {
                bool ok = true;
                for (std::size_t k = 1; k < earlier[v].size() && ok; ++k)
                    ok = G.has_edge(image[earlier[v][k]], g);
                if (!ok) continue;
                image[v] = g;
                self(self, v + 1);
            }
        }
        image[v] = -1;
    };
    recurse(recurse, 0);
    return out;
}

BigInt count_tree_homomorphisms(const Graph& T, const Graph& G) {
    if (!is_tree(T)) throw std::invalid_argument("count_tree_homomorphisms: T is not a tree");
    const int nT = T.vertex_count();
    const int nG = G.vertex_count();
    if (nG == 0) return 0;

    // BFS order from vertex 0
    std::vector<int> order{0}, parent(nT, -1);
    std::vector<char> seen(nT, 0);
    seen[0] = 1;
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (int u : T.neighbors(order[i])) {
            if (!seen[u]) {
                seen[u] = 1;
                parent[u] = order[i];
                order.push_back(u);
            }
        }
    }

    std::vector<std::vector<BigInt>> cnt(nT, std::vector<BigInt>(nG, BigInt{1}));
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int v = *it;
        if (parent[v] == -1) continue;
        // fold v's table into the parent: multiply by neighbor-sums
        for (int g = 0; g < nG; ++g) {
            BigInt sum{0};
            for (int gn : G.neighbors(g)) sum += cnt[v][gn];
            cnt[parent[v]][g] *= sum;
        }
    }
    BigInt total{0};
    for (int g = 0; g < nG; ++g) total += cnt[0][g];
    return total;
}

BigInt cycle_hom_trace(int k, const Graph& G) {
    if (k < 3) throw std::invalid_argument("cycle_hom_trace needs k >= 3");
    const int n = G.vertex_count();
    if (n == 0) return 0;
    using Matrix = std::vector<std::vector<BigInt>>;
    Matrix adj(n, std::vector<BigInt>(n, BigInt{0}));
    for (auto [u, v] : G.edges()) {
        adj[u][v] = 1;
        adj[v][u] = 1;
    }
    auto matmul = [n](const Matrix& a, const Matrix& b) {
        Matrix c(n, std::vector<BigInt>(n, BigInt{0}));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (a[i][l] == 0) continue;
                for (int j = 0; j < n; ++j) c[i][j] += a[i][l] * b[l][j];
            }
        return c;
    };
    Matrix result;
    bool have = false;
    Matrix base = adj;
    int e = k;
    while (e > 0) {
        if (e & 1) {
            result = have ? matmul(result, base) : base;
            have = true;
        }
        e >>= 1;
        if (e > 0) base = matmul(base, base);
    }
    BigInt trace{0};
    for (int i = 0; i < n; ++i) trace += result[i][i];
    return trace;
}

SidorenkoReport sidorenko_check(const Graph& H, const Graph& G) {
    const int n = G.vertex_count();
    if (n < 1) throw std::invalid_argument("sidorenko_check: G must have at least one vertex");
    SidorenkoReport report;
    report.lhs = count_homomorphisms(H, G);
    const Rat edge_prob = Rat{BigInt{2} * G.edge_count(), BigInt{n} * n};
    report.rhs = Rat{int_pow(BigInt{n}, H.vertex_count())} * rat_pow(edge_prob, H.edge_count());
    report.holds = Rat{report.lhs} >= report.rhs;
    if (report.rhs > 0) report.ratio = Rat{report.lhs} / report.rhs;
    return report;
}

Rat weighted_hom_count(const Graph& H, const WeightedGraph& W) {
    const int nH = H.vertex_count();
    const int nW = W.vertex_count();
    if (nH == 0) return Rat{1};
    if (nW == 0) return Rat{0};
    std::vector<std::vector<int>> earlier(nH);
    for (auto [u, v] : H.edges()) earlier[std::max(u, v)].push_back(std::min(u, v));

    std::vector<int> image(nH, -1);
    Rat total{0};
    auto recurse = [&](auto&& self, int v, Rat acc) -> void {
        if (v == nH) {
            total += acc;
            return;
        }
        for (int g = 0; g < nW; ++g) {
            Rat next = acc;
            for (int u : earlier[v]) next *= W.weight(image[u], g);
            if (next == 0) continue;
            image[v] = g;
            self(self, v + 1, next);
        }
        image[v] = -1;
    };
    recurse(recurse, 0, Rat{1});
    return total;
}

// psi_graph is declared in graph.hpp but needs homomorphism enumeration.
Graph psi_graph(const Graph& K, const Graph& G) {
    const auto homs = enumerate_homomorphisms(K, G);
    const int n = static_cast<int>(homs.size());
    const int nK = K.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = true;
            for (int v = 0; v < nK && adjacent; ++v)
                adjacent = G.has_edge(homs[i][v], homs[j][v]);
            if (adjacent) edges.emplace_back(i, j);
        }
    }
    return Graph(n, edges);
}

}  // namespace homlab

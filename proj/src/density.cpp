#include "homlab/density.hpp"

#include "homlab/errors.hpp"
#include "homlab/hom.hpp"
#include "homlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace homlab {

namespace {

void check_params(const DensityParams& params) {
    if (params.rho <= 0 || params.rho > 1) throw std::invalid_argument("rho must be in (0,1]");
    if (params.d <= 0 || params.d > 1) throw std::invalid_argument("d must be in (0,1]");
}

Rat induced_density(const Graph& G, const std::vector<int>& U) {
    if (U.size() < 2) return Rat{1};
    long edges = 0;
    for (std::size_t i = 0; i < U.size(); ++i)
        for (std::size_t j = i + 1; j < U.size(); ++j)
            if (G.has_edge(U[i], U[j])) ++edges;
    const long pairs = static_cast<long>(U.size()) * (static_cast<long>(U.size()) - 1) / 2;
    return Rat{edges, pairs};
}

}  // namespace

LocalDensityReport is_locally_dense(const Graph& G, const DensityParams& params,
                                    const LocalDensityOptions& opts) {
    check_params(params);
    const int n = G.vertex_count();
    LocalDensityReport report;
    report.dense = true;

    const Rat min_size = params.rho * n;
    auto qualifies = [&](long size) { return Rat{size} >= min_size; };
    auto dense_enough = [&](long size, long edges) {
        // edges >= d * C(size,2)
        return Rat{2 * edges} >= params.d * size * (size - 1);
    };

    if (!opts.sampling) {
        if (n > opts.exhaustive_max_n)
            throw BudgetExceeded("is_locally_dense: exhaustive mode capped at n = " +
                                 std::to_string(opts.exhaustive_max_n));
        report.exhaustive = true;
        // Gray-code walk; e(U) maintained incrementally per toggled vertex
        std::vector<char> in(n, 0);
        long edges = 0, size = 0;
        const std::uint64_t total = std::uint64_t{1} << n;
        std::uint64_t prev_gray = 0;
        for (std::uint64_t i = 1; i < total; ++i) {
            const std::uint64_t gray = i ^ (i >> 1);
            const int v = __builtin_ctzll(gray ^ prev_gray);
            prev_gray = gray;
            long touching = 0;
            for (int u : G.neighbors(v)) touching += in[u];
            if (in[v]) {
                in[v] = 0;
                --size;
                edges -= touching;
            } else {
                in[v] = 1;
                ++size;
                edges += touching;
            }
            if (size >= 2 && qualifies(size) && !dense_enough(size, edges)) {
                std::vector<int> witness;
                for (int u = 0; u < n; ++u)
                    if (in[u]) witness.push_back(u);
                report.dense = false;
                report.witness = witness;
                report.witness_density = induced_density(G, witness);
                return report;
            }
        }
        return report;
    }

    const auto [count, seed] = *opts.sampling;
    CounterRng rng(seed, 0x647375ULL);
    const BigInt ceil_size = (rat_num(min_size) + rat_den(min_size) - 1) / rat_den(min_size);
    const long lo = std::max<long>(2, ceil_size.convert_to<long>());
    if (lo > n) return report;  // nothing qualifies
    for (std::uint64_t s = 0; s < count; ++s) {
        const long size = lo + static_cast<long>(rng.uniform_below(static_cast<std::uint64_t>(n - lo + 1)));
        std::vector<int> pool(n);
        std::iota(pool.begin(), pool.end(), 0);
        for (long i = 0; i < size; ++i) {
            const auto j = i + static_cast<long>(rng.uniform_below(static_cast<std::uint64_t>(n - i)));
            std::swap(pool[i], pool[j]);
        }
        std::vector<int> U(pool.begin(), pool.begin() + size);
        std::sort(U.begin(), U.end());
        if (induced_density(G, U) < params.d) {
            report.dense = false;
            report.witness = U;
            report.witness_density = induced_density(G, U);
            return report;
        }
    }
    return report;
}

MinDegreeReport extract_min_degree_subgraph(const Graph& G) {
    const int n = G.vertex_count();
    if (G.edge_count() == 0) throw std::invalid_argument("average degree must be positive");
    const Rat avg{BigInt{2} * G.edge_count(), n};
    if (Rat{G.max_degree()} > 2 * avg)
        throw std::invalid_argument("maximum degree exceeds twice the average degree");
    const Rat threshold = avg / 4;

    std::vector<char> alive(n, 1);
    std::vector<int> degree(n);
    for (int v = 0; v < n; ++v) degree[v] = G.degree(v);
    int remaining = n;
    for (;;) {
        int victim = -1;
        for (int v = 0; v < n; ++v) {
            if (!alive[v]) continue;
            if (victim == -1 || degree[v] < degree[victim]) victim = v;
        }
        if (victim == -1) throw std::logic_error("peeled every vertex; bound violated");
        if (Rat{degree[victim]} >= threshold) break;
        alive[victim] = 0;
        --remaining;
        for (int u : G.neighbors(victim))
            if (alive[u]) --degree[u];
    }
    (void)remaining;
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
        if (alive[v]) keep.push_back(v);
    auto [sub, verts] = induced_subgraph(G, keep);
    return MinDegreeReport{std::move(sub), std::move(verts), avg, threshold};
}

CodegreeReport codegree_bound_check(const Graph& G, const std::vector<int>& U) {
    std::vector<int> u = U;
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    for (int v : u)
        if (v < 0 || v >= G.vertex_count())
            throw std::invalid_argument("U contains an out-of-range vertex");

    CodegreeReport report;
    report.delta = G.min_degree();
    const long n = G.vertex_count();
    const long usize = static_cast<long>(u.size());
    report.precondition_met = static_cast<long long>(report.delta) * usize >= 2LL * n;
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = i + 1; j < u.size(); ++j) report.lhs += G.codegree(u[i], u[j]);
    report.rhs = Rat{BigInt{report.delta} * report.delta, BigInt{4} * n} *
                 Rat{BigInt{usize} * (usize - 1), 2};
    report.holds = Rat{report.lhs} >= report.rhs;
    return report;
}

WeightedGraph codegree_weight_matrix(const Graph& G) {
    const int n = G.vertex_count();
    std::vector<std::vector<Rat>> w(n, std::vector<Rat>(n));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) w[u][v] = Rat{G.codegree(u, v), n};
    return WeightedGraph(n, w);
}

namespace {

// Iterates all |V(G)|^|V(H)| assignments, handing each tuple's product of
// codegrees over E(H) to the sink.
template <typename Sink>
void for_each_codegree_product(const Graph& H, const Graph& G, std::uint64_t max_tuples,
                               Sink&& sink) {
    const int h = H.vertex_count();
    const int n = G.vertex_count();
    if (n == 0) {
        if (h == 0) sink(BigInt{1});
        return;
    }
    double log_total = h * std::log(static_cast<double>(n));
    if (log_total > std::log(static_cast<double>(max_tuples)))
        throw BudgetExceeded("codegree sum exceeds tuple budget");

    std::vector<std::vector<int>> earlier(h);
    for (auto [a, b] : H.edges()) earlier[std::max(a, b)].push_back(std::min(a, b));
    std::vector<int> x(h, 0);
    auto recurse = [&](auto&& self, int v, BigInt acc) -> void {
        if (v == h) {
            sink(acc);
            return;
        }
        for (int g = 0; g < n; ++g) {
            BigInt next = acc;
            for (int u : earlier[v]) next *= G.codegree(x[u], g);
            x[v] = g;
            self(self, v + 1, next);
        }
    };
    recurse(recurse, 0, BigInt{1});
}

}  // namespace

IdentityAudit subdivision_identity_check(const Graph& H, const Graph& G,
                                         std::uint64_t max_tuples) {
    IdentityAudit audit;
    for_each_codegree_product(H, G, max_tuples, [&](const BigInt& prod) { audit.lhs += prod; });
    audit.rhs = count_homomorphisms(subdivision(H), G);
    audit.holds = audit.lhs == audit.rhs;
    return audit;
}

ReplacementAudit replacement_convexity_check(const Graph& H, const Graph& G, int t,
                                             std::uint64_t max_tuples) {
    if (t < 1) throw std::invalid_argument("replacement needs t >= 1");
    ReplacementAudit audit;
    BigInt plain_sum{0};
    for_each_codegree_product(H, G, max_tuples, [&](const BigInt& prod) {
        plain_sum += prod;
        audit.power_sum += int_pow(prod, static_cast<unsigned long>(t));
    });
    audit.replacement_count = count_homomorphisms(k2t_replacement(H, t), G);
    audit.identity = audit.power_sum == audit.replacement_count;
    // sum x^t >= n^h (sum x / n^h)^t, cleared to integers
    const BigInt nh = int_pow(BigInt{G.vertex_count()}, H.vertex_count());
    audit.convexity_lhs = audit.power_sum * int_pow(nh, static_cast<unsigned long>(t - 1));
    audit.convexity_rhs = int_pow(plain_sum, static_cast<unsigned long>(t));
    audit.convexity = audit.convexity_lhs >= audit.convexity_rhs;
    return audit;
}

HolderAudit holder_triangle_check(const Graph& G, int r, int s, int t) {
    if (r < 1 || s < 1 || t < 1) throw std::invalid_argument("exponents must be positive");
    const int n = G.vertex_count();
    if (n == 0) throw std::invalid_argument("empty G");
    BigInt s_rst{0}, s_111{0};
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                const BigInt dxy{G.codegree(x, y)};
                const BigInt dyz{G.codegree(y, z)};
                const BigInt dzx{G.codegree(z, x)};
                s_rst += int_pow(dxy, r) * int_pow(dyz, s) * int_pow(dzx, t);
                s_111 += dxy * dyz * dzx;
            }
    const Rat n3{int_pow(BigInt{n}, 3)};
    const Rat big_x = Rat{s_rst} / n3;
    const Rat mean = Rat{s_111} / n3;
    HolderAudit audit;
    audit.lhs = rat_pow(big_x, 3);
    audit.rhs = rat_pow(mean, r + s + t);
    audit.holds = audit.lhs >= audit.rhs;
    return audit;
}

CartesianAudit cartesian_cycle_audit(const Graph& H, int k, const Graph& G,
                                     const BigInt& cycle_hom_cap) {
    if (k < 2) throw std::invalid_argument("cartesian audit needs k >= 2");
    if (!is_connected(H) || H.edge_count() < 1 || H.vertex_count() < 2)
        throw std::invalid_argument("H must be connected with at least one edge");
    if (G.edge_count() < 1) throw std::invalid_argument("G must have an edge");

    CartesianAudit audit;
    audit.k = k;
    audit.v = H.vertex_count();
    audit.e = H.edge_count();

    const int n = G.vertex_count();
    audit.hom_c4 = cycle_hom_trace(4, G);
    audit.hom_c2k = cycle_hom_trace(2 * k, G);
    if (audit.hom_c2k > cycle_hom_cap)
        throw BudgetExceeded("|Hom(C_2k,G)| = " + audit.hom_c2k.str() + " exceeds cap " +
                             cycle_hom_cap.str());

    audit.p = Rat{BigInt{2} * G.edge_count(), BigInt{n} * n};
    audit.alpha = Rat{audit.hom_c4} / (rat_pow(audit.p, 4) * int_pow(BigInt{n}, 4));
    audit.beta_k =
        Rat{audit.hom_c2k} / (rat_pow(audit.p, 2 * k) * int_pow(BigInt{n}, 2 * static_cast<unsigned long>(k)));
    audit.maxdeg_ok = Rat{G.max_degree()} <= 2 * audit.p * n;

    audit.a = {true, audit.alpha >= 1 && audit.beta_k >= 1};
    audit.b = {audit.maxdeg_ok, audit.beta_k <= rat_pow(Rat{2}, 2 * k - 4) * audit.alpha};

    const Graph cycle = cycle_graph(2 * k);
    const Graph psi = psi_graph(cycle, G);
    audit.hom_product = count_homomorphisms(cartesian_product(H, cycle), G);
    audit.hom_via_psi = count_homomorphisms(H, psi);
    audit.c = {true, audit.hom_product == audit.hom_via_psi};

    const Graph psi_k2 = psi_graph(complete_graph(2), G);
    audit.psi_k2_edges2 = BigInt{2} * psi_k2.edge_count();
    audit.d = {true, audit.psi_k2_edges2 == audit.hom_c4};

    audit.psi_c2k_edges2 = BigInt{2} * psi.edge_count();
    audit.e_psi = {true, Rat{audit.psi_c2k_edges2} >=
                             rat_pow(audit.alpha, 2 * k) * rat_pow(audit.p, 6 * k) *
                                 int_pow(BigInt{n}, 4 * static_cast<unsigned long>(k))};

    audit.sidorenko_step_holds = sidorenko_check(H, psi).holds;
    const long v = audit.v, e = audit.e;
    const Rat bound = rat_pow(Rat{2}, (2 * k - 4) * (v - 2 * e)) *
                      rat_pow(audit.alpha, 2 * e * k + v - 2 * e) *
                      int_pow(BigInt{n}, static_cast<unsigned long>(2 * k * v)) *
                      rat_pow(audit.p, 2 * k * v + 2 * k * e);
    audit.f = {audit.maxdeg_ok && audit.sidorenko_step_holds, Rat{audit.hom_product} >= bound};
    return audit;
}

}  // namespace homlab

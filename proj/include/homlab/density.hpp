#pragma once

#include "homlab/graph.hpp"
#include "homlab/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace homlab {

struct DensityParams {
    Rat rho;  // in (0,1]
    Rat d;    // in (0,1]
};

struct LocalDensityReport {
    bool dense = false;
    bool exhaustive = false;  // sampling verdicts are only probabilistic
    std::optional<std::vector<int>> witness;
    Rat witness_density{0};
};

struct LocalDensityOptions {
    int exhaustive_max_n = 20;
    // (subset count, seed); when set, sampling mode is used instead
    std::optional<std::pair<std::uint64_t, std::uint64_t>> sampling;
};

/// Is the induced density at least d on every U with |U| >= rho*|V(G)|?
/// Exhaustive mode walks subsets in Gray-code order and returns an exact
/// verdict plus a violating U when false.
LocalDensityReport is_locally_dense(const Graph& G, const DensityParams& params,
                                    const LocalDensityOptions& opts = {});

struct MinDegreeReport {
    Graph subgraph;
    std::vector<int> vertices;
    Rat average_degree;  // of the input graph
    Rat threshold;       // average_degree / 4
};

/// Greedy lowest-degree-first removal until the minimum degree reaches a
/// quarter of the original average degree. Requires average degree > 0
/// and maximum degree at most twice the average.
MinDegreeReport extract_min_degree_subgraph(const Graph& G);

struct CodegreeReport {
    bool precondition_met = false;  // delta * |U| >= 2n
    int delta = 0;
    BigInt lhs{0};  // sum of codegrees over unordered pairs in U
    Rat rhs{0};     // (delta^2 / 4n) * C(|U|,2)
    bool holds = false;
};

CodegreeReport codegree_bound_check(const Graph& G, const std::vector<int>& U);

/// W(u,v) = codegree(u,v) / |V(G)|, including the diagonal deg(v)/|V(G)|.
WeightedGraph codegree_weight_matrix(const Graph& G);

struct IdentityAudit {
    BigInt lhs{0};
    BigInt rhs{0};
    bool holds = false;
};

/// sum over tuples x of prod over E(H) of codegree(x_i,x_j)
/// == |Hom(subdivision(H), G)|.
IdentityAudit subdivision_identity_check(const Graph& H, const Graph& G,
                                         std::uint64_t max_tuples = 50'000'000);

struct ReplacementAudit {
    BigInt power_sum{0};          // sum of per-tuple codegree products to the t-th power
    BigInt replacement_count{0};  // |Hom(k2t_replacement(H,t), G)|
    bool identity = false;
    BigInt convexity_lhs{0};  // power_sum * n^(h(t-1))
    BigInt convexity_rhs{0};  // (sum of products)^t
    bool convexity = false;
};

ReplacementAudit replacement_convexity_check(const Graph& H, const Graph& G, int t,
                                             std::uint64_t max_tuples = 50'000'000);

struct HolderAudit {
    Rat lhs;  // X^3
    Rat rhs;  // E[d d d]^(r+s+t)
    bool holds = false;
};

/// X = E_{x,y,z} d(x,y)^r d(y,z)^s d(z,x)^t compared against
/// E[d(x,y) d(y,z) d(z,x)]^((r+s+t)/3), cleared of the fractional
/// exponent by cubing both sides.
HolderAudit holder_triangle_check(const Graph& G, int r, int s, int t);

struct CheckStatus {
    bool applicable = false;
    bool holds = false;

    bool passed() const { return !applicable || holds; }
};

struct CartesianAudit {
    int k = 0;
    int v = 0, e = 0;  // |V(H)|, |E(H)|
    Rat p, alpha, beta_k;
    BigInt hom_c4{0}, hom_c2k{0};
    BigInt hom_product{0};   // |Hom(H x C_2k, G)|, direct count
    BigInt hom_via_psi{0};   // |Hom(H, psi_{C_2k}(G))|
    BigInt psi_k2_edges2{0};   // 2|E(psi_{K_2}(G))|
    BigInt psi_c2k_edges2{0};  // 2|E(psi_{C_2k}(G))|
    bool maxdeg_ok = false;            // max degree <= 2pn
    bool sidorenko_step_holds = false; // Hom(H, psi) meets its own bound
    CheckStatus a, b, c, d, e_psi, f;

    bool all_applicable_hold() const {
        return a.passed() && b.passed() && c.passed() && d.passed() && e_psi.passed() &&
               f.passed();
    }
};

/// The even-cycle product chain on one instance:
///   (a) alpha >= 1 and beta_k >= 1
///   (b) beta_k <= 2^(2k-4) alpha              [needs max degree <= 2pn]
///   (c) |Hom(H x C_2k, G)| == |Hom(H, psi_{C_2k}(G))|
///   (d) 2|E(psi_{K_2}(G))| == |Hom(C_4, G)|
///   (e) 2|E(psi_{C_2k}(G))| >= alpha^2k p^6k n^4k
///   (f) |Hom(H x C_2k, G)| >= 2^((2k-4)(v-2e)) alpha^(2ek+v-2e) n^2kv p^(2kv+2ke)
///       [needs (b)'s precondition and the Sidorenko step for H into psi]
/// H must be connected with at least one edge; enforcing the cap on
/// |Hom(C_2k, G)| keeps psi_{C_2k}(G) at desk scale.
CartesianAudit cartesian_cycle_audit(const Graph& H, int k, const Graph& G,
                                     const BigInt& cycle_hom_cap = BigInt{2000});

}  // namespace homlab

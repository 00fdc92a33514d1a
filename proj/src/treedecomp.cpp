#include "homlab/treedecomp.hpp"

#include "homlab/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace homlab {

namespace {

std::string vertex_set_string(const std::vector<int>& vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << '}';
    return out.str();
}

std::vector<int> sorted_intersection(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

// bag-tree structure checks; throws on malformation
void check_structure(const Graph& H, const TreeDecomposition& D) {
    const int B = static_cast<int>(D.bags.size());
    if (B == 0) throw std::invalid_argument("decomposition has no bags");
    for (const auto& bag : D.bags) {
        if (bag.empty()) throw std::invalid_argument("empty bag");
        if (!std::is_sorted(bag.begin(), bag.end()) ||
            std::adjacent_find(bag.begin(), bag.end()) != bag.end())
            throw std::invalid_argument("bag must be sorted and duplicate-free");
        for (int v : bag)
            if (v < 0 || v >= H.vertex_count())
                throw std::invalid_argument("bag vertex out of range");
    }
    if (static_cast<int>(D.tree_edges.size()) != B - 1)
        throw std::invalid_argument("bag tree must have exactly bags-1 edges");
    std::vector<std::vector<int>> adj(B);
    for (auto [x, y] : D.tree_edges) {
        if (x < 0 || y < 0 || x >= B || y >= B || x == y)
            throw std::invalid_argument("bad bag tree edge");
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<char> seen(B, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (!seen[y]) {
                seen[y] = 1;
                ++reached;
                q.push(y);
            }
    }
    if (reached != B) throw std::invalid_argument("bag tree is not connected");
}

std::vector<int> bag_tree_path(const TreeDecomposition& D, int from, int to) {
    const int B = static_cast<int>(D.bags.size());
    std::vector<std::vector<int>> adj(B);
    for (auto [x, y] : D.tree_edges) {
        adj[x].push_back(y);
        adj[y].push_back(x);
    }
    std::vector<int> parent(B, -2);
    std::queue<int> q;
    q.push(from);
    parent[from] = -1;
    while (!q.empty()) {
        const int x = q.front();
        q.pop();
        for (int y : adj[x])
            if (parent[y] == -2) {
                parent[y] = x;
                q.push(y);
            }
    }
    std::vector<int> path;
    for (int x = to; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

// minimal connected subset of the tree H[bag] containing S
std::vector<int> minimal_subtree_in_bag(const Graph& H, const std::vector<int>& bag,
                                        const std::vector<int>& S) {
    if (S.empty()) return {bag.front()};
    std::vector<char> in_bag(H.vertex_count(), 0);
    for (int v : bag) in_bag[v] = 1;
    std::vector<int> parent(H.vertex_count(), -2);
    std::queue<int> q;
    q.push(S[0]);
    parent[S[0]] = -1;
    while (!q.empty()) {
        const int v = q.front();
        q.pop();
        for (int u : H.neighbors(v))
            if (in_bag[u] && parent[u] == -2) {
                parent[u] = v;
                q.push(u);
            }
    }
    std::set<int> keep;
    for (int s : S) {
        for (int v = s; v != -1; v = parent[v]) {
            if (keep.count(v)) break;
            keep.insert(v);
        }
    }
    return {keep.begin(), keep.end()};
}

}  // namespace

DecompositionDiagnostics validate_decomposition(const Graph& H, const TreeDecomposition& D) {
    check_structure(H, D);
    DecompositionDiagnostics diag;

    std::vector<char> covered(H.vertex_count(), 0);
    for (const auto& bag : D.bags)
        for (int v : bag) covered[v] = 1;
    for (int v = 0; v < H.vertex_count(); ++v) {
        if (!covered[v]) {
            diag.cover_vertices = {false, "vertex " + std::to_string(v) + " in no bag"};
            break;
        }
    }

    for (auto [u, v] : H.edges()) {
        bool found = false;
        for (const auto& bag : D.bags)
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v)) {
                found = true;
                break;
            }
        if (!found) {
            diag.cover_edges = {false, "edge {" + std::to_string(u) + "," + std::to_string(v) + "} in no bag"};
            break;
        }
    }

    const int B = static_cast<int>(D.bags.size());
    for (int x = 0; x < B && diag.path_connectivity.ok; ++x) {
        for (int y = x + 1; y < B && diag.path_connectivity.ok; ++y) {
            const auto common = sorted_intersection(D.bags[x], D.bags[y]);
            if (common.empty()) continue;
            for (int z : bag_tree_path(D, x, y)) {
                if (!std::includes(D.bags[z].begin(), D.bags[z].end(), common.begin(), common.end())) {
                    diag.path_connectivity = {
                        false, "bags " + std::to_string(x) + "," + std::to_string(y) +
                                   " share " + vertex_set_string(common) + " but bag " +
                                   std::to_string(z) + " on their path omits it"};
                    break;
                }
            }
        }
    }
    return diag;
}

DecompositionDiagnostics validate_strong(const Graph& H, const TreeDecomposition& D) {
    DecompositionDiagnostics diag = validate_decomposition(H, D);
    diag.strong_checked = true;
    if (!diag.cover_vertices.ok || !diag.cover_edges.ok || !diag.path_connectivity.ok) {
        diag.edge_disjoint_trees = {false, "not evaluated: base axioms failed"};
        diag.intersection_isomorphism = {false, "not evaluated: base axioms failed"};
        return diag;
    }

    for (std::size_t i = 0; i < D.bags.size(); ++i) {
        const auto [sub, verts] = induced_subgraph(H, D.bags[i]);
        if (!is_tree(sub)) {
            diag.edge_disjoint_trees = {false, "H[bag " + std::to_string(i) + "] is not a tree"};
            return diag;
        }
    }
    for (auto [u, v] : H.edges()) {
        int owners = 0;
        for (const auto& bag : D.bags)
            if (std::binary_search(bag.begin(), bag.end(), u) &&
                std::binary_search(bag.begin(), bag.end(), v))
                ++owners;
        if (owners != 1) {
            diag.edge_disjoint_trees = {false, "edge {" + std::to_string(u) + "," +
                                                   std::to_string(v) + "} lies in " +
                                                   std::to_string(owners) + " bags"};
            return diag;
        }
    }

    for (auto [x, y] : D.tree_edges) {
        const auto common = sorted_intersection(D.bags[x], D.bags[y]);
        if (common.empty()) diag.empty_intersection_convention_used = true;
        const auto sub1 = minimal_subtree_in_bag(H, D.bags[x], common);
        const auto sub2 = minimal_subtree_in_bag(H, D.bags[y], common);
        if (!rooted_iso_fixing(H, sub1, sub2, common)) {
            diag.intersection_isomorphism = {
                false, "no isomorphism fixing " + vertex_set_string(common) +
                           " between minimal subtrees of bags " + std::to_string(x) +
                           " and " + std::to_string(y)};
            return diag;
        }
    }
    return diag;
}

std::vector<int> minimal_subtree(const Graph& T, const std::vector<int>& S) {
    if (!is_tree(T)) throw std::invalid_argument("minimal_subtree: not a tree");
    std::vector<int> all(T.vertex_count());
    for (int v = 0; v < T.vertex_count(); ++v) all[v] = v;
    for (int s : S)
        if (s < 0 || s >= T.vertex_count())
            throw std::invalid_argument("minimal_subtree: vertex out of range");
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return minimal_subtree_in_bag(T, all, sorted);
}

std::vector<int> minimal_subtree_within(const Graph& H, const std::vector<int>& bag,
                                        const std::vector<int>& S) {
    std::vector<int> sorted = S;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    return minimal_subtree_in_bag(H, bag, sorted);
}

std::optional<std::vector<std::pair<int, int>>> rooted_iso_fixing(
    const Graph& host, const std::vector<int>& t1, const std::vector<int>& t2,
    const std::vector<int>& fixed) {
    if (t1.size() != t2.size()) return std::nullopt;
    const int k = static_cast<int>(t1.size());

    auto degree_in = [&](const std::vector<int>& set, int v) {
        int d = 0;
        for (int u : host.neighbors(v))
            if (std::find(set.begin(), set.end(), u) != set.end()) ++d;
        return d;
    };
    for (int f : fixed) {
        if (std::find(t1.begin(), t1.end(), f) == t1.end() ||
            std::find(t2.begin(), t2.end(), f) == t2.end())
            throw std::invalid_argument("fixed vertex not in both trees");
    }

    // order: fixed vertices first (forced), then the rest
    std::vector<int> order = fixed;
    for (int v : t1)
        if (std::find(fixed.begin(), fixed.end(), v) == fixed.end()) order.push_back(v);

    std::vector<std::pair<int, int>> mapping;
    std::vector<char> used(t2.size(), 0);
    auto backtrack = [&](auto&& self, int idx) -> bool {
        if (idx == k) return true;
        const int v = order[idx];
        const bool forced = idx < static_cast<int>(fixed.size());
        for (std::size_t j = 0; j < t2.size(); ++j) {
            const int w = t2[j];
            if (used[j]) continue;
            if (forced && w != v) continue;
            if (degree_in(t1, v) != degree_in(t2, w)) continue;
            bool consistent = true;
            for (auto [a, b] : mapping) {
                if (host.has_edge(v, a) != host.has_edge(w, b)) {
                    consistent = false;
                    break;
                }
            }
            if (!consistent) continue;
            mapping.emplace_back(v, w);
            used[j] = 1;
            if (self(self, idx + 1)) return true;
            used[j] = 0;
            mapping.pop_back();
        }
        return false;
    };
    if (!backtrack(backtrack, 0)) return std::nullopt;
    return mapping;
}

namespace {

// all labeled trees on k nodes via Pruefer sequences, lexicographic
std::vector<std::vector<std::pair<int, int>>> all_labeled_trees(int k) {
    std::vector<std::vector<std::pair<int, int>>> trees;
    if (k == 1) {
        trees.push_back({});
        return trees;
    }
    if (k == 2) {
        trees.push_back({{0, 1}});
        return trees;
    }
    std::vector<int> seq(k - 2, 0);
    for (;;) {
        // decode
        std::vector<int> deg(k, 1);
        for (int x : seq) ++deg[x];
        std::vector<std::pair<int, int>> edges;
        std::set<int> leaves;
        for (int v = 0; v < k; ++v)
            if (deg[v] == 1) leaves.insert(v);
        std::vector<int> local = seq;
        for (int x : local) {
            const int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
            if (--deg[x] == 1) leaves.insert(x);
        }
        const int a = *leaves.begin();
        const int b = *std::next(leaves.begin());
        edges.emplace_back(a, b);
        trees.push_back(std::move(edges));
        // next sequence
        int i = k - 3;
        while (i >= 0 && seq[i] == k - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return trees;
}

}  // namespace

StrongSearchResult find_strong_decomposition(const Graph& H, const SearchBudget& budget) {
    if (H.vertex_count() > budget.max_vertices)
        throw BudgetExceeded("find_strong_decomposition: graph exceeds vertex cap " +
                             std::to_string(budget.max_vertices));
    StrongSearchResult result;
    const int m = H.edge_count();

    std::vector<char> has_edge_vertex(H.vertex_count(), 0);
    for (auto [u, v] : H.edges()) has_edge_vertex[u] = has_edge_vertex[v] = 1;
    std::vector<int> isolated;
    for (int v = 0; v < H.vertex_count(); ++v)
        if (!has_edge_vertex[v]) isolated.push_back(v);

    auto try_partition = [&](const std::vector<int>& part_of, int parts) -> bool {
        std::vector<std::vector<int>> part_edges(parts);
        for (int i = 0; i < m; ++i) part_edges[part_of[i]].push_back(i);
        std::vector<std::vector<int>> bags;
        for (int p = 0; p < parts; ++p) {
            std::set<int> verts;
            for (int e : part_edges[p]) {
                verts.insert(H.edges()[e].first);
                verts.insert(H.edges()[e].second);
            }
            std::vector<int> bag(verts.begin(), verts.end());
            const auto [sub, order] = induced_subgraph(H, bag);
            // the part must be exactly the induced edge set, and a tree
            if (sub.edge_count() != static_cast<int>(part_edges[p].size())) return false;
            if (!is_tree(sub)) return false;
            bags.push_back(std::move(bag));
        }
        for (int v : isolated) bags.push_back({v});
        const int B = static_cast<int>(bags.size());
        for (const auto& tree_edges : all_labeled_trees(B)) {
            if (++result.nodes_explored > budget.max_nodes)
                throw BudgetExceeded("find_strong_decomposition: node budget exhausted");
            TreeDecomposition cand{bags, tree_edges};
            if (validate_strong(H, cand).valid()) {
                result.decomposition = std::move(cand);
                return true;
            }
        }
        return false;
    };

    if (m == 0) {
        // edgeless: singleton bags joined in a path
        std::vector<std::vector<int>> bags;
        for (int v = 0; v < H.vertex_count(); ++v) bags.push_back({v});
        std::vector<std::pair<int, int>> tree_edges;
        for (int i = 0; i + 1 < static_cast<int>(bags.size()); ++i) tree_edges.emplace_back(i, i + 1);
        TreeDecomposition cand{bags, tree_edges};
        if (validate_strong(H, cand).valid()) result.decomposition = std::move(cand);
        result.exhaustive = true;
        return result;
    }

    // set partitions of the edge list in restricted-growth order, grouped
    // by part count so smaller bag families are found first
    for (int k = 1; k <= m && !result.decomposition; ++k) {
        std::vector<int> part_of(m, 0);
        auto assign = [&](auto&& self, int edge, int used) -> bool {
            if (++result.nodes_explored > budget.max_nodes)
                throw BudgetExceeded("find_strong_decomposition: node budget exhausted");
            if (edge == m) return used == k && try_partition(part_of, k);
            const int limit = std::min(used + 1, k);
            for (int p = 0; p < limit; ++p) {
                part_of[edge] = p;
                if (self(self, edge + 1, std::max(used, p + 1))) return true;
            }
            return false;
        };
        if (assign(assign, 0, 0)) break;
    }
    result.exhaustive = true;
    return result;
}

FamilyClassification classify_family(const Graph& H, const TreeDecomposition& D,
                                     const SearchBudget& budget) {
    if (!validate_strong(H, D).valid())
        throw std::invalid_argument("classify_family: D is not a valid strong decomposition");
    FamilyClassification out;

    const int B = static_cast<int>(D.bags.size());
    if (B <= 2) {
        out.reflection_tree = true;
    } else {
        for (int c = 0; c < B && !out.reflection_tree; ++c) {
            bool star = true;
            for (auto [x, y] : D.tree_edges)
                if (x != c && y != c) {
                    star = false;
                    break;
                }
            out.reflection_tree = star;
        }
    }

    const int n = H.vertex_count();
    if (n > budget.max_vertices)
        throw BudgetExceeded("classify_family: graph exceeds vertex cap");
    std::uint64_t nodes = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<int> A;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) A.push_back(v);
        bool independent = true;
        for (std::size_t i = 0; i < A.size() && independent; ++i)
            for (std::size_t j = i + 1; j < A.size() && independent; ++j)
                if (H.has_edge(A[i], A[j])) independent = false;
        if (!independent) continue;

        std::vector<std::vector<int>> bags;
        for (int a : A) {
            std::vector<int> bag{a};
            for (int u : H.neighbors(a)) bag.push_back(u);
            std::sort(bag.begin(), bag.end());
            bags.push_back(std::move(bag));
        }
        for (const auto& tree_edges : all_labeled_trees(static_cast<int>(bags.size()))) {
            if (++nodes > budget.max_nodes)
                throw BudgetExceeded("classify_family: node budget exhausted");
            TreeDecomposition cand{bags, tree_edges};
            bool ok = false;
            try {
                ok = validate_strong(H, cand).valid();
            } catch (const std::invalid_argument&) {
                ok = false;  // structurally impossible candidate
            }
            if (ok) {
                out.tree_arrangeable_witness = A;
                return out;
            }
        }
    }
    return out;
}

TreeDecomposition parse_decomposition(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string{"decomposition JSON: "} + e.what());
    }
    TreeDecomposition D;
    if (!j.contains("bags") || !j["bags"].is_array())
        throw ParseError("decomposition JSON: missing \"bags\" array");
    for (const auto& bag : j["bags"]) {
        std::vector<int> b = bag.get<std::vector<int>>();
        std::sort(b.begin(), b.end());
        D.bags.push_back(std::move(b));
    }
    if (j.contains("tree_edges")) {
        for (const auto& e : j["tree_edges"]) {
            const auto pair = e.get<std::vector<int>>();
            if (pair.size() != 2) throw ParseError("decomposition JSON: tree edge must have 2 entries");
            D.tree_edges.emplace_back(pair[0], pair[1]);
        }
    }
    return D;
}

std::string serialize_decomposition(const TreeDecomposition& D) {
    nlohmann::json j;
    j["bags"] = D.bags;
    j["tree_edges"] = nlohmann::json::array();
    for (auto [x, y] : D.tree_edges) j["tree_edges"].push_back({x, y});
    return j.dump();
}

}  // namespace homlab

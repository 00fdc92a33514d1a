#include "homlab/graph.hpp"

#include "homlab/errors.hpp"
#include "homlab/rng.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <queue>
#include <sstream>

namespace homlab {

Graph::Graph(int n) : n_(n), adj_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_checked(u, v);
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    std::sort(edges_.begin(), edges_.end());
}

void Graph::add_edge_checked(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loop rejected");
    if (u > v) std::swap(u, v);
    if (std::find(adj_[u].begin(), adj_[u].end(), v) != adj_[u].end())
        throw std::invalid_argument("duplicate edge rejected");
    edges_.emplace_back(u, v);
    adj_[u].push_back(v);
    adj_[v].push_back(u);
}

std::span<const int> Graph::neighbors(int v) const {
    return {adj_[v].data(), adj_[v].size()};
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

bool Graph::has_edge(int u, int v) const {
    if (u == v) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::codegree(int u, int v) const {
    const auto& a = adj_[u];
    const auto& b = adj_[v];
    int count = 0;
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j]) ++i;
        else if (a[i] > b[j]) ++j;
        else { ++count; ++i; ++j; }
    }
    return count;
}

bool is_homomorphism(const Graph& H, const Graph& G, const Homomorphism& h) {
    if (static_cast<int>(h.size()) != H.vertex_count()) return false;
    for (int img : h)
        if (img < 0 || img >= G.vertex_count()) return false;
    for (auto [u, v] : H.edges())
        if (!G.has_edge(h[u], h[v])) return false;
    return true;
}

WeightedGraph::WeightedGraph(int n, std::vector<std::vector<Rat>> weights)
    : n_(n), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != n)
        throw std::invalid_argument("weight matrix size mismatch");
    for (int u = 0; u < n; ++u) {
        if (static_cast<int>(weights_[u].size()) != n)
            throw std::invalid_argument("weight matrix not square");
        for (int v = 0; v < n; ++v) {
            if (weights_[u][v] < 0 || weights_[u][v] > 1)
                throw std::invalid_argument("weight outside [0,1]");
            if (weights_[u][v] != weights_[v][u])
                throw std::invalid_argument("weight matrix not symmetric");
        }
    }
}

// ---- named families ----

FamilySpec parse_family_spec(const std::string& text) {
    FamilySpec spec;
    const auto colon = text.find(':');
    spec.name = text.substr(0, colon);
    if (colon != std::string::npos) {
        // file paths may contain commas, keep them whole
        if (spec.name == "file") {
            spec.params.push_back(text.substr(colon + 1));
        } else {
            std::string rest = text.substr(colon + 1);
            std::size_t pos = 0;
            while (pos <= rest.size()) {
                const auto comma = rest.find(',', pos);
                spec.params.push_back(rest.substr(pos, comma - pos));
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
        }
    }
    if (spec.name.empty()) throw ParseError("empty family name in spec: " + text);
    return spec;
}

namespace {

int spec_int(const FamilySpec& spec, std::size_t idx) {
    if (idx >= spec.params.size())
        throw ParseError("family '" + spec.name + "' is missing a parameter");
    const std::string& tok = spec.params[idx];
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw ParseError("bad integer parameter '" + tok + "' for family " + spec.name);
    return value;
}

}  // namespace

Graph complete_graph(int k) {
    if (k < 1) throw std::invalid_argument("complete graph needs k >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) edges.emplace_back(u, v);
    return Graph(k, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle length must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph(n, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path needs >= 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, edges);
}

Graph biclique_graph(int s, int t) {
    if (s < 1 || t < 1) throw std::invalid_argument("biclique needs s,t >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) edges.emplace_back(u, s + v);
    return Graph(s + t, edges);
}

Graph empty_graph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    return Graph(n);
}

Graph gnp_graph(int n, const Rat& p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gnp needs n >= 1");
    if (p < 0 || p > 1) throw std::invalid_argument("gnp needs p in [0,1]");
    const BigInt num = rat_num(p);
    const BigInt den = rat_den(p);
    const BigInt scale = BigInt{1} << 64;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const auto idx = static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n) + static_cast<std::uint64_t>(v);
            const std::uint64_t draw = CounterRng::at(seed, /*stream=*/0x676e70ULL, idx);
            if (BigInt{draw} * den < num * scale) edges.emplace_back(u, v);
        }
    }
    return Graph(n, edges);
}

Graph build_named_graph(const FamilySpec& spec) {
    if (spec.name == "complete") return complete_graph(spec_int(spec, 0));
    if (spec.name == "cycle") return cycle_graph(spec_int(spec, 0));
    if (spec.name == "path") return path_graph(spec_int(spec, 0));
    if (spec.name == "biclique") return biclique_graph(spec_int(spec, 0), spec_int(spec, 1));
    if (spec.name == "star") return biclique_graph(1, spec_int(spec, 0));
    if (spec.name == "empty") return empty_graph(spec_int(spec, 0));
    if (spec.name == "gnp") {
        if (spec.params.size() < 3) throw ParseError("gnp needs n,p,seed");
        const int n = spec_int(spec, 0);
        const Rat p = rat_from_string(spec.params[1]);
        const std::uint64_t seed = std::stoull(spec.params[2]);
        return gnp_graph(n, p, seed);
    }
    throw ParseError("unknown graph family: " + spec.name);
}

Graph build_named_graph(const std::string& spec) {
    return build_named_graph(parse_family_spec(spec));
}

// ---- constructions ----

Graph subdivision(const Graph& H) { return k2t_replacement(H, 1); }

Graph k2t_replacement(const Graph& H, int t) {
    if (t < 1) throw std::invalid_argument("replacement needs t >= 1");
    const int n = H.vertex_count();
    std::vector<std::pair<int, int>> edges;
    int next = n;
    for (auto [u, v] : H.edges()) {
        for (int j = 0; j < t; ++j) {
            edges.emplace_back(u, next);
            edges.emplace_back(v, next);
            ++next;
        }
    }
    return Graph(next, edges);
}

Graph cartesian_product(const Graph& H1, const Graph& H2) {
    const int n1 = H1.vertex_count();
    const int n2 = H2.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (auto [x, y] : H1.edges())
        for (int z = 0; z < n2; ++z) edges.emplace_back(x * n2 + z, y * n2 + z);
    for (auto [x, y] : H2.edges())
        for (int z = 0; z < n1; ++z) edges.emplace_back(z * n2 + x, z * n2 + y);
    return Graph(n1 * n2, edges);
}

std::optional<std::vector<int>> is_bipartite(const Graph& H) {
    const int n = H.vertex_count();
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            for (int v : H.neighbors(u)) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& G, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::vector<int> index(G.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : G.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    return {Graph(static_cast<int>(vertices.size()), edges), vertices};
}

std::vector<std::vector<int>> connected_components(const Graph& G) {
    const int n = G.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        comp[s] = id;
        q.push(s);
        while (!q.empty()) {
            const int u = q.front();
            q.pop();
            out[id].push_back(u);
            for (int v : G.neighbors(u)) {
                if (comp[v] == -1) {
                    comp[v] = id;
                    q.push(v);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_connected(const Graph& G) {
    return G.vertex_count() <= 1 || connected_components(G).size() == 1;
}

bool is_tree(const Graph& G) {
    return G.vertex_count() >= 1 && is_connected(G) &&
           G.edge_count() == G.vertex_count() - 1;
}

bool isomorphic(const Graph& A, const Graph& B) {
    const int n = A.vertex_count();
    if (n != B.vertex_count() || A.edge_count() != B.edge_count()) return false;
    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) { da[v] = A.degree(v); db[v] = B.degree(v); }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    auto backtrack = [&](auto&& self, int u) -> bool {
        if (u == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || da[u] != db[w]) continue;
            bool ok = true;
            for (int prev = 0; prev < u && ok; ++prev)
                if (A.has_edge(u, prev) != B.has_edge(w, map[prev])) ok = false;
            if (!ok) continue;
            map[u] = w;
            used[w] = true;
            if (self(self, u + 1)) return true;
            used[w] = false;
            map[u] = -1;
        }
        return false;
    };
    return backtrack(backtrack, 0);
}

// ---- text format ----

Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> data_lines;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        data_lines.push_back(line);
    }
    if (data_lines.empty()) throw ParseError("empty graph file");

    auto read_ints = [](const std::string& s, int expect) {
        std::istringstream ls(s);
        std::vector<long> values;
        long x;
        while (ls >> x) values.push_back(x);
        if (!ls.eof()) throw ParseError("non-integer token in line: " + s);
        if (static_cast<int>(values.size()) != expect)
            throw ParseError("expected " + std::to_string(expect) + " integers in line: " + s);
        return values;
    };

    const auto header = read_ints(data_lines[0], 2);
    const long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw ParseError("negative counts in header");
    if (static_cast<long>(data_lines.size()) - 1 != m)
        throw ParseError("edge count mismatch: header says " + std::to_string(m) +
                         ", found " + std::to_string(data_lines.size() - 1));
    std::vector<std::pair<int, int>> edges;
    for (long i = 0; i < m; ++i) {
        const auto uv = read_ints(data_lines[1 + i], 2);
        if (uv[0] < 0 || uv[1] < 0 || uv[0] >= n || uv[1] >= n)
            throw ParseError("vertex index out of range in line: " + data_lines[1 + i]);
        if (uv[0] == uv[1]) throw ParseError("self-loop in line: " + data_lines[1 + i]);
        edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    try {
        return Graph(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

std::string serialize_graph(const Graph& G) {
    std::ostringstream out;
    out << G.vertex_count() << ' ' << G.edge_count() << '\n';
    for (auto [u, v] : G.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace homlab

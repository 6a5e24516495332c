#include "rdom/graph.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <string>

namespace rdom {

namespace {

std::string pair_text(int u, int v) {
    return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw DomainError("graph order must be nonnegative");
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : Graph(n) {
    edges_.reserve(edge_list.size());
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw DomainError("edge endpoint out of range: " + pair_text(u, v) +
                              " with order " + std::to_string(n_));
        if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges_.emplace_back(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw DomainError("duplicate edge " + pair_text(dup->first, dup->second));
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

DistanceMatrix::DistanceMatrix(int n)
    : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), UNREACHABLE) {
    if (n < 0) throw DomainError("distance matrix order must be nonnegative");
}

int DistanceMatrix::at(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw DomainError("distance query " + pair_text(u, v) + " out of range for order " +
                          std::to_string(n_));
    return d_[static_cast<std::size_t>(u) * n_ + v];
}

const int* DistanceMatrix::row(int u) const {
    if (u < 0 || u >= n_)
        throw DomainError("distance row " + std::to_string(u) + " out of range");
    return d_.data() + static_cast<std::size_t>(u) * n_;
}

namespace {

// Distances from src written into dist (preallocated, size n, reset here).
void bfs(const Graph& g, int src, std::vector<int>& dist) {
    std::fill(dist.begin(), dist.end(), UNREACHABLE);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (dist[w] == UNREACHABLE) {
                dist[w] = dist[u] + 1;
                q.push(w);
            }
        }
    }
}

}  // namespace

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.order();
    DistanceMatrix dm(n);
    std::vector<int> dist(n);
    for (int s = 0; s < n; ++s) {
        bfs(g, s, dist);
        for (int v = 0; v < n; ++v) dm.at_mutable(s, v) = dist[v];
    }
    return dm;
}

bool is_connected(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    std::vector<int> dist(n);
    bfs(g, 0, dist);
    return std::none_of(dist.begin(), dist.end(),
                        [](int d) { return d == UNREACHABLE; });
}

GraphMetrics metrics(const Graph& g) {
    GraphMetrics out;
    const int n = g.order();
    if (n == 0) {
        out.connected = true;
        return out;
    }

    std::vector<int> dist(n), parent(n);
    int diameter = 0, radius = -1;
    bool connected = true;
    int best_cycle = -1;

    for (int s = 0; s < n; ++s) {
        // BFS with parents, reused for both eccentricities and girth.
        std::fill(dist.begin(), dist.end(), UNREACHABLE);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        std::queue<int> q;
        q.push(s);
        int ecc = 0;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (dist[w] == UNREACHABLE) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    ecc = std::max(ecc, dist[w]);
                    q.push(w);
                }
            }
        }
        if (std::any_of(dist.begin(), dist.end(),
                        [](int d) { return d == UNREACHABLE; }))
            connected = false;
        diameter = std::max(diameter, ecc);
        radius = (radius == -1) ? ecc : std::min(radius, ecc);

        // Every non-tree edge closes a walk of length dist[u]+dist[w]+1
        // containing a cycle no longer than that; rooted at a vertex of a
        // shortest cycle the bound is attained, so the minimum over all
        // roots is the exact girth.
        for (auto [u, w] : g.edges()) {
            if (dist[u] == UNREACHABLE || dist[w] == UNREACHABLE) continue;
            if (parent[u] == w || parent[w] == u) continue;
            int len = dist[u] + dist[w] + 1;
            if (best_cycle == -1 || len < best_cycle) best_cycle = len;
        }
    }

    out.connected = connected;
    if (connected) {
        out.diameter = diameter;
        out.radius = radius;
    }
    if (best_cycle != -1) out.girth = best_cycle;
    return out;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    const int na = a.order();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    return Graph(na + b.order(), edges);
}

Graph join(const Graph& a, const Graph& b) {
    const int na = a.order(), nb = b.order();
    std::vector<std::pair<int, int>> edges = a.edges();
    for (auto [u, v] : b.edges()) edges.emplace_back(u + na, v + na);
    for (int u = 0; u < na; ++u)
        for (int v = 0; v < nb; ++v) edges.emplace_back(u, na + v);
    return Graph(na + nb, edges);
}

Graph substitute(const Graph& g, const std::map<int, Graph>& assignment) {
    const int n = g.order();
    for (const auto& [v, h] : assignment) {
        if (v < 0 || v >= n)
            throw DomainError("substitution key " + std::to_string(v) +
                              " is not a vertex of the host graph");
        if (h.order() < 1)
            throw DomainError("substituted graphs must have at least one vertex");
    }

    std::vector<int> block_size(n, 1), offset(n, 0);
    for (const auto& [v, h] : assignment) block_size[v] = h.order();
    int total = 0;
    for (int v = 0; v < n; ++v) {
        offset[v] = total;
        total += block_size[v];
    }

    std::vector<std::pair<int, int>> edges;
    for (const auto& [v, h] : assignment)
        for (auto [x, y] : h.edges()) edges.emplace_back(offset[v] + x, offset[v] + y);
    for (auto [u, v] : g.edges())
        for (int x = 0; x < block_size[u]; ++x)
            for (int y = 0; y < block_size[v]; ++y)
                edges.emplace_back(offset[u] + x, offset[v] + y);
    return Graph(total, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw DomainError("path requires order >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw DomainError("cycle requires order >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    if (n < 1) throw DomainError("complete graph requires order >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, edges);
}

Graph complete_bipartite_graph(int s, int t) {
    if (s < 1 || t < 1) throw DomainError("complete bipartite parts must be nonempty");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) edges.emplace_back(u, s + v);
    return Graph(s + t, edges);
}

Graph star_graph(int n) {
    if (n < 1) throw DomainError("star requires order >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, edges);
}

Graph bull_graph() {
    return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
}

namespace {

bool extend_isomorphism(const std::array<unsigned, 8>& am,
                        const std::array<unsigned, 8>& bm,
                        const std::vector<int>& da, const std::vector<int>& db,
                        std::vector<int>& perm, std::vector<bool>& used, int i) {
    const int n = static_cast<int>(perm.size());
    if (i == n) return true;
    for (int c = 0; c < n; ++c) {
        if (used[c] || db[c] != da[i]) continue;
        bool ok = true;
        for (int j = 0; j < i && ok; ++j)
            ok = (((am[i] >> j) & 1u) == ((bm[c] >> perm[j]) & 1u));
        if (!ok) continue;
        perm[i] = c;
        used[c] = true;
        if (extend_isomorphism(am, bm, da, db, perm, used, i + 1)) return true;
        used[c] = false;
    }
    return false;
}

}  // namespace

bool is_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    const int n = a.order();
    if (n > 8) throw SizeCapError("isomorphism search is capped at order 8");
    if (a.size() != b.size()) return false;

    std::vector<int> da(n), db(n);
    for (int v = 0; v < n; ++v) {
        da[v] = a.degree(v);
        db[v] = b.degree(v);
    }
    {
        auto sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }

    std::array<unsigned, 8> am{}, bm{};
    for (auto [u, v] : a.edges()) {
        am[u] |= 1u << v;
        am[v] |= 1u << u;
    }
    for (auto [u, v] : b.edges()) {
        bm[u] |= 1u << v;
        bm[v] |= 1u << u;
    }

    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    return extend_isomorphism(am, bm, da, db, perm, used, 0);
}

std::vector<std::vector<int>> twin_classes(const Graph& g) {
    const int n = g.order();
    const int words = (n + 63) / 64;
    // Adjacency rows as bitsets; twins are detected by xor-ing rows and
    // masking out the pair itself.
    std::vector<std::vector<std::uint64_t>> nb(
        n, std::vector<std::uint64_t>(std::max(words, 1), 0));
    for (auto [u, v] : g.edges()) {
        nb[u][v / 64] |= std::uint64_t{1} << (v % 64);
        nb[v][u / 64] |= std::uint64_t{1} << (u % 64);
    }

    auto twins = [&](int u, int v) {
        for (int w = 0; w < words; ++w) {
            std::uint64_t x = nb[u][w] ^ nb[v][w];
            if (u / 64 == w) x &= ~(std::uint64_t{1} << (u % 64));
            if (v / 64 == w) x &= ~(std::uint64_t{1} << (v % 64));
            if (x != 0) return false;
        }
        return true;
    };

    std::vector<std::vector<int>> classes;
    std::vector<bool> assigned(n, false);
    for (int u = 0; u < n; ++u) {
        if (assigned[u]) continue;
        std::vector<int> cls{u};
        assigned[u] = true;
        for (int v = u + 1; v < n; ++v) {
            if (!assigned[v] && twins(u, v)) {
                cls.push_back(v);
                assigned[v] = true;
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

}  // namespace rdom

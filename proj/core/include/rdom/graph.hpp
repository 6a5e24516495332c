#ifndef RDOM_GRAPH_HPP
#define RDOM_GRAPH_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rdom/errors.hpp"

namespace rdom {

// Undirected simple graph on vertex labels 0..n-1. Immutable after
// construction, so instances are safe to share across threads. Edges are kept
// normalized (u < v) and sorted; adjacency lists are sorted as well.
class Graph {
public:
    // Graph with n isolated vertices.
    explicit Graph(int n = 0);

    // Graph with the given edges. Endpoints are normalized to (min, max).
    // Throws DomainError on out-of-range endpoints, self-loops, or duplicate
    // edges.
    Graph(int n, const std::vector<std::pair<int, int>>& edge_list);

    int order() const noexcept { return n_; }
    int size() const noexcept { return static_cast<int>(edges_.size()); }

    bool has_edge(int u, int v) const;
    int degree(int v) const;
    const std::vector<int>& neighbors(int v) const;

    // All edges as (u, v) pairs with u < v, sorted lexicographically.
    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }

    bool operator==(const Graph& other) const noexcept {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Marker for "no path exists" in distance matrices. Kept negative so any
// comparison against a real hop count must go through DistanceMatrix helpers
// or check for it explicitly.
inline constexpr int UNREACHABLE = -1;

// All-pairs hop distances. Finite entries satisfy d(u,u)=0, symmetry, and the
// triangle inequality; pairs in different components hold UNREACHABLE.
class DistanceMatrix {
public:
    explicit DistanceMatrix(int n);

    int n() const noexcept { return n_; }

    int at(int u, int v) const;

    // True iff v is reachable from u within at most k hops.
    bool within(int u, int v, int k) const {
        int d = at(u, v);
        return d != UNREACHABLE && d <= k;
    }

    // Row of distances from u (size n). Valid while the matrix lives.
    const int* row(int u) const;

    int& at_mutable(int u, int v) { return d_[static_cast<std::size_t>(u) * n_ + v]; }

private:
    int n_;
    std::vector<int> d_;
};

// Connectivity flag plus the three classic metric parameters. diameter and
// radius are empty when the graph is disconnected or empty; girth is empty
// when the graph has no cycle.
struct GraphMetrics {
    bool connected = false;
    std::optional<int> diameter;
    std::optional<int> radius;
    std::optional<int> girth;
};

// Breadth-first distances from every vertex; UNREACHABLE across components.
DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Connectivity, eccentricity extremes, and shortest cycle length. Girth is
// found by running a BFS from every vertex and closing the first non-tree
// edge met; the minimum over all roots is exact. O(n*m).
GraphMetrics metrics(const Graph& g);

// Edge present in the result iff absent in the input (no self-loops).
Graph complement(const Graph& g);

// Vertices of b are relabeled by offset a.order(); edges are kept as-is.
Graph disjoint_union(const Graph& a, const Graph& b);

// Disjoint union plus every cross edge between the two vertex sets.
Graph join(const Graph& a, const Graph& b);

// Replace each assigned vertex i of g by its graph H_i: vertices of H_i keep
// their internal edges, and every vertex of H_i is joined to the image of
// every g-neighbor of i (in particular, blocks of adjacent vertices are fully
// joined to each other). Unassigned vertices behave as single vertices.
// Output labels: vertex i's block occupies consecutive labels, blocks ordered
// by i.
Graph substitute(const Graph& g, const std::map<int, Graph>& assignment);

// Basic named generators. Labels are canonical: path 0-1-...-(n-1); cycle
// additionally closes (n-1)-0; complete bipartite parts are {0..s-1} and
// {s..s+t-1}; the star's center is 0. The bull is the triangle {0,1,2} with
// pendant vertices 3 at 0 and 4 at 1.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite_graph(int s, int t);
Graph star_graph(int n);  // K_{1,n-1} on n vertices
Graph bull_graph();

// Brute-force label bijection search with a degree-sequence prefilter.
// Guarded at order <= 8 (throws SizeCapError above); order mismatch is false
// immediately.
bool is_isomorphic(const Graph& a, const Graph& b);

// Partition of the vertices into twin classes: u and v share a class iff
// N(u)\{v} = N(v)\{u}, i.e. they are adjacency twins (open or closed). Every
// vertex outside such a pair sits at equal distance from both, which is what
// makes twins interchangeable for resolving-type searches. Classes are sorted
// internally and by first member.
std::vector<std::vector<int>> twin_classes(const Graph& g);

}  // namespace rdom

#endif  // RDOM_GRAPH_HPP

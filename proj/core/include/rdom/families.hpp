#ifndef RDOM_FAMILIES_HPP
#define RDOM_FAMILIES_HPP

#include <optional>
#include <string>

#include "rdom/graph.hpp"

namespace rdom {

// Parameterized graph families. The six tree gadgets (TGamma, T1..T5) and the
// spider realize prescribed combinations of metric dimension, distance
// k-domination number and distance k-resolving domination number; ExtremalGr
// is the largest graph of diameter <= 2k with a resolving dominating set of a
// given size; the rest are the standard named graphs.
enum class Family {
    TGamma,             // comb tree: spine of gamma vertices, one k-leg each
    T1,                 // l double-leg hubs in a path, m branches at the last
    T2,                 // center with pendant, l k-legs, m branches
    T3,                 // center with pendant, m branches, long spine
    T4,                 // center with r k-legs, m branches, l double-leg hubs
    T5,                 // center with pendant, m branches, l hubs, forked tail
    Spider,             // one center, `legs` legs of length k
    ExtremalGr,         // maximum-order graph with gamma_rk = r, diam <= 2k
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Star,               // K_{1,n-1}, center labeled 0
    Bull,
};

// Lowercase family identifier as used by the CLI ("t_gamma", "t1", ...,
// "spider", "extremal_gr", "path", "cycle", "complete",
// "complete_bipartite", "star", "bull"). The parser also accepts hyphens in
// place of underscores ("extremal-gr").
std::string family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

// Parameter bundle for generate_family. Which fields are read depends on the
// family; unused fields are ignored. Validation rules:
//   TGamma:            k >= 1, gamma >= 1
//   T1:                k >= 2, m >= 0, l >= 1
//   T2, T3:            k >= 2, m >= 1, l >= 1
//   T4:                k >= 2, m >= 0, l >= 0, r >= 3, (m,l) != (0,0)
//   T5:                k >= 2, m >= 0, l >= 0, r >= 2, (m,l) != (0,0)
//   Spider:            k >= 1, legs >= 3
//   ExtremalGr:        k >= 1, r >= 2 (refuses orders beyond order_cap)
//   Path, Cycle, Complete, Star: n (>= 1 / >= 3 / >= 1 / >= 1)
//   CompleteBipartite: s >= 1, t >= 1
//   Bull:              no parameters
struct FamilyParams {
    Family family = Family::Path;
    int k = 1;
    int m = 0;
    int l = 0;
    int r = 0;
    int legs = 0;
    int gamma = 0;
    int s = 0;
    int t = 0;
    int n = 0;
    int order_cap = 256;  // ExtremalGr guard: largest order it will build
};

// Expected invariant values a family construction is designed to attain, as
// functions of its parameters. Fields are absent where the family makes no
// claim. Used by the certification sweeps and by `sweep` in the CLI.
struct FamilyClaims {
    std::optional<int> dim;
    std::optional<int> gamma_k;
    std::optional<int> gamma_rk;
};

// Build the graph. Throws DomainError when parameters violate the rules
// above, SizeCapError when ExtremalGr would exceed params.order_cap.
Graph generate_family(const FamilyParams& params);

// The invariant values the construction targets (see FamilyClaims).
FamilyClaims family_claims(const FamilyParams& params);

// Closed forms for the two basic families, covering every k >= 1 and n in
// the family's range.
int predicted_gamma_rk_path(int n, int k);    // n >= 2
int predicted_gamma_rk_cycle(int n, int k);   // n >= 3

// Metric dimension of a tree that is not a path: number of leaves minus
// number of exterior major vertices (vertices of degree >= 3 with a leaf
// attached through a path of degree-2 vertices). Throws DomainError if g is
// not a tree or is a path.
int tree_metric_dimension_formula(const Graph& g);

// Largest possible order of a graph with distance k-resolving domination
// number r and diameter at most 2k:  r + r * sum_{p=1..k} (2p+1)^(r-1).
// Throws DomainError on overflow past the long long range.
long long predicted_max_order(int k, int r);

// The extremal graph attaining predicted_max_order(k, r). Vertices 0..r-1
// form the canonical resolving dominating set. Equivalent to
// generate_family with Family::ExtremalGr.
Graph extremal_gr(int k, int r, int order_cap = 256);

// The integer vectors labelling extremal_gr(k, r), in label order: entry v
// is the length-r vector for vertex v. The first r entries are the anchor
// vectors (entry i has 0 in coordinate i and 2k+1 elsewhere); in the graph,
// the distance from any non-anchor vertex q to anchor i equals q[i].
std::vector<std::vector<int>> extremal_gr_vectors(int k, int r, int order_cap = 256);

// A prescribed-invariants instance: find a connected graph G with
// dim(G) = beta, gamma_k(G) = gamma and gamma_rk(G) = alpha.
struct TripleTarget {
    int k = 1;
    int beta = 1;   // metric dimension
    int gamma = 1;  // distance k-domination number
    int alpha = 1;  // distance k-resolving domination number
};

// True iff a connected graph with the prescribed triple exists, i.e.
// max(beta, gamma) <= alpha <= beta + gamma and the triple is not of the
// impossible shape beta = 1, gamma >= 2, alpha = gamma + 1.
bool triple_is_realizable(const TripleTarget& t);

// Construct a connected graph realizing the triple, dispatching to the tree
// gadgets above. Requires k >= 2 and positive targets (DomainError
// otherwise); throws InfeasibleTripleError when no graph exists. The
// dispatched construction is re-validated against the family's claim
// formulas before returning.
Graph realize_triple(const TripleTarget& t);

}  // namespace rdom

#endif  // RDOM_FAMILIES_HPP

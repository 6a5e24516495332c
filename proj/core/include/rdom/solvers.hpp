#ifndef RDOM_SOLVERS_HPP
#define RDOM_SOLVERS_HPP

#include <optional>
#include <string>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

// A vertex set is carried as a strictly increasing list of labels.
using VertexSet = std::vector<int>;

// The four set predicates the searches minimize over.
enum class SetPredicate {
    Resolving,              // distinct distance vectors for all pairs outside the set
    KDominating,            // every vertex outside the set within distance k of it
    KResolvingDominating,   // both of the above
    KLocatingDominating,    // nonempty, pairwise-distinct open k-neighborhood traces
};

// Invariant names for witnessed values.
enum class Invariant {
    Dim,      // metric dimension (minimum resolving set)
    GammaK,   // distance k-domination number
    GammaRk,  // distance k-resolving domination number
    LdK,      // k-locating-domination number
};

Invariant invariant_for(SetPredicate p);
SetPredicate predicate_for(Invariant inv);

// Lowercase identifier used in CLI arguments and JSON output:
// "dim", "gamma_k", "gamma_rk", "ld_k".
std::string invariant_name(Invariant inv);

// An exact invariant value together with the witness set certifying it. The
// search procedure guarantees that no smaller set satisfies the predicate and
// that the witness is the lexicographically smallest optimum.
struct WitnessedInvariant {
    Invariant name = Invariant::Dim;
    std::optional<int> k;  // absent for Dim
    int value = 0;
    VertexSet witness;
};

// Knobs for minimum_set. Defaults match the plain library contract; the
// extensions exist for the verification harness.
struct SearchOptions {
    // Refuse graphs larger than this (default keeps sets within one machine
    // word; may be raised to at most 256).
    int cap = 64;

    // Vertices every candidate set must contain; they count toward the
    // cardinality, and the reported minimum is over supersets of this set.
    VertexSet forced;

    // Permit disconnected inputs. Unreachable vertices are then never
    // dominated, and distance vectors compare the unreachable marker equal to
    // itself. Off by default: the plain contract requires connectivity.
    bool allow_disconnected = false;

    // Subset enumeration workers. The result (value and lexicographically
    // smallest witness) is identical for every thread count.
    int threads = 1;
};

// Predicate checks against a precomputed distance matrix. These evaluate the
// definitions literally and are safe on any vertex set (not only minimal
// ones).
//
// True iff every vertex outside s has some member of s within distance k.
// The empty set dominates nothing (false whenever the graph has a vertex).
bool is_distance_k_dominating(const Graph& g, const DistanceMatrix& dm,
                              const VertexSet& s, int k);

// True iff all pairs of distinct vertices outside w have distinct distance
// vectors to w. Vertices inside w need no check: each is the unique vertex at
// distance zero from itself. Throws ConnectivityError on disconnected input.
bool is_resolving(const Graph& g, const DistanceMatrix& dm, const VertexSet& w);

// True iff every vertex v outside x has a nonempty trace N_k(v) ∩ x, and the
// traces are pairwise distinct, where N_k(v) = {u : 0 < d(v,u) <= k} is the
// open k-neighborhood. Throws ConnectivityError on disconnected input.
bool is_k_locating_dominating(const Graph& g, const DistanceMatrix& dm,
                              const VertexSet& x, int k);

// Exact minimum-cardinality search. Candidate cardinalities are tried in
// increasing order from a cheap lower bound (twin classes for resolving-type
// predicates, ball-coverage for domination); for each cardinality, candidate
// sets are enumerated in lexicographic order and the first feasible one is
// returned, which makes the witness the lexicographic minimum among optima.
//
// k is required (>= 1) for every predicate except Resolving, where it must be
// absent. Throws ConnectivityError for disconnected input unless
// opts.allow_disconnected, SizeCapError when order() exceeds opts.cap, and
// DomainError on empty graphs or bad k.
WitnessedInvariant minimum_set(const Graph& g, SetPredicate predicate,
                               std::optional<int> k = std::nullopt,
                               const SearchOptions& opts = {});

// Dim, GammaK, GammaRk and LdK for one k, sharing a single distance matrix.
// Returned in that order.
std::vector<WitnessedInvariant> all_invariants(const Graph& g, int k,
                                               const SearchOptions& opts = {});

}  // namespace rdom

#endif  // RDOM_SOLVERS_HPP

#include "rdom/solvers.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <climits>
#include <cstdint>
#include <thread>

namespace rdom {

Invariant invariant_for(SetPredicate p) {
    switch (p) {
        case SetPredicate::Resolving: return Invariant::Dim;
        case SetPredicate::KDominating: return Invariant::GammaK;
        case SetPredicate::KResolvingDominating: return Invariant::GammaRk;
        case SetPredicate::KLocatingDominating: return Invariant::LdK;
    }
    throw DomainError("unknown predicate");
}

SetPredicate predicate_for(Invariant inv) {
    switch (inv) {
        case Invariant::Dim: return SetPredicate::Resolving;
        case Invariant::GammaK: return SetPredicate::KDominating;
        case Invariant::GammaRk: return SetPredicate::KResolvingDominating;
        case Invariant::LdK: return SetPredicate::KLocatingDominating;
    }
    throw DomainError("unknown invariant");
}

std::string invariant_name(Invariant inv) {
    switch (inv) {
        case Invariant::Dim: return "dim";
        case Invariant::GammaK: return "gamma_k";
        case Invariant::GammaRk: return "gamma_rk";
        case Invariant::LdK: return "ld_k";
    }
    throw DomainError("unknown invariant");
}

namespace {

// Vertex sets as fixed-width bitsets; four words cover the hard cap of 256.
constexpr int kMaskWords = 4;
using Mask = std::array<std::uint64_t, kMaskWords>;

inline void mask_set(Mask& m, int v) { m[v >> 6] |= std::uint64_t{1} << (v & 63); }
inline void mask_clear(Mask& m, int v) { m[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
inline bool mask_test(const Mask& m, int v) { return (m[v >> 6] >> (v & 63)) & 1u; }

inline void mask_or(Mask& a, const Mask& b) {
    for (int w = 0; w < kMaskWords; ++w) a[w] |= b[w];
}

inline bool mask_covers(const Mask& a, const Mask& b) {  // a superset of b
    for (int w = 0; w < kMaskWords; ++w)
        if ((b[w] & ~a[w]) != 0) return false;
    return true;
}

inline int mask_count(const Mask& m) {
    int c = 0;
    for (int w = 0; w < kMaskWords; ++w) c += std::popcount(m[w]);
    return c;
}

void validate_vertex_set(const VertexSet& s, int n, const char* what) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw DomainError(std::string(what) + " contains vertex " +
                              std::to_string(s[i]) + " out of range for order " +
                              std::to_string(n));
        if (i > 0 && s[i - 1] >= s[i])
            throw DomainError(std::string(what) + " must be strictly increasing");
    }
}

// Immutable per-search state: which parts of the predicate apply, plus the
// k-ball bitsets used by the domination and trace tests.
struct Ctx {
    const DistanceMatrix* dm = nullptr;
    int n = 0;
    bool need_dom = false, need_res = false, need_ld = false;
    std::vector<Mask> ball;      // closed k-ball of each vertex
    std::vector<Mask> openball;  // ball minus the vertex itself
    Mask all{};
};

Ctx make_ctx(const Graph& g, const DistanceMatrix& dm, SetPredicate pred, int k) {
    Ctx ctx;
    ctx.dm = &dm;
    ctx.n = g.order();
    ctx.need_dom = pred == SetPredicate::KDominating ||
                   pred == SetPredicate::KResolvingDominating;
    ctx.need_res = pred == SetPredicate::Resolving ||
                   pred == SetPredicate::KResolvingDominating;
    ctx.need_ld = pred == SetPredicate::KLocatingDominating;
    for (int v = 0; v < ctx.n; ++v) mask_set(ctx.all, v);
    if (ctx.need_dom || ctx.need_ld) {
        ctx.ball.assign(ctx.n, Mask{});
        ctx.openball.assign(ctx.n, Mask{});
        for (int v = 0; v < ctx.n; ++v) {
            const int* row = dm.row(v);
            for (int u = 0; u < ctx.n; ++u)
                if (row[u] != UNREACHABLE && row[u] <= k) mask_set(ctx.ball[v], u);
            ctx.openball[v] = ctx.ball[v];
            mask_clear(ctx.openball[v], v);
        }
    }
    return ctx;
}

// Reusable buffers so the feasibility test allocates nothing in steady state.
struct Scratch {
    std::vector<int> sig;
    std::vector<int> rows;
    std::vector<Mask> traces;
    std::vector<int> merged;
};

bool feasible(const Ctx& ctx, const std::vector<int>& members, Scratch& s) {
    if (ctx.need_dom) {
        Mask covered{};
        for (int v : members) mask_or(covered, ctx.ball[v]);
        if (!mask_covers(covered, ctx.all)) return false;
    }

    Mask inset{};
    for (int v : members) mask_set(inset, v);

    if (ctx.need_res) {
        // Distance signatures of outside vertices; duplicates decided by
        // sorting row indices over the flat signature buffer.
        const int c = static_cast<int>(members.size());
        s.sig.clear();
        s.rows.clear();
        for (int v = 0; v < ctx.n; ++v) {
            if (mask_test(inset, v)) continue;
            const int* row = ctx.dm->row(v);
            s.rows.push_back(static_cast<int>(s.rows.size()));
            for (int w : members) s.sig.push_back(row[w]);
        }
        if (s.rows.size() > 1) {
            if (c == 0) return false;
            auto begin = s.sig.begin();
            auto cmp = [&](int a, int b) {
                return std::lexicographical_compare(
                    begin + static_cast<std::ptrdiff_t>(a) * c,
                    begin + static_cast<std::ptrdiff_t>(a + 1) * c,
                    begin + static_cast<std::ptrdiff_t>(b) * c,
                    begin + static_cast<std::ptrdiff_t>(b + 1) * c);
            };
            std::sort(s.rows.begin(), s.rows.end(), cmp);
            for (std::size_t i = 1; i < s.rows.size(); ++i) {
                int a = s.rows[i - 1], b = s.rows[i];
                if (std::equal(begin + static_cast<std::ptrdiff_t>(a) * c,
                               begin + static_cast<std::ptrdiff_t>(a + 1) * c,
                               begin + static_cast<std::ptrdiff_t>(b) * c))
                    return false;
            }
        }
    }

    if (ctx.need_ld) {
        s.traces.clear();
        for (int v = 0; v < ctx.n; ++v) {
            if (mask_test(inset, v)) continue;
            Mask t{};
            for (int w = 0; w < kMaskWords; ++w)
                t[w] = ctx.openball[v][w] & inset[w];
            if (t == Mask{}) return false;
            s.traces.push_back(t);
        }
        std::sort(s.traces.begin(), s.traces.end());
        if (std::adjacent_find(s.traces.begin(), s.traces.end()) != s.traces.end())
            return false;
    }
    return true;
}

// Lexicographic scan of the size-`pick` subsets of `free` whose smallest
// element is free[first_idx], merged with the forced set; returns the first
// feasible candidate.
std::optional<VertexSet> scan_stratum(const Ctx& ctx, const VertexSet& forced,
                                      const std::vector<int>& free_verts,
                                      int first_idx, int pick, Scratch& s) {
    const int fn = static_cast<int>(free_verts.size());
    if (first_idx + pick > fn) return std::nullopt;
    std::vector<int> idx(pick);
    for (int i = 0; i < pick; ++i) idx[i] = first_idx + i;
    while (true) {
        s.merged.clear();
        std::size_t fi = 0;
        for (int i = 0; i < pick; ++i) {
            int v = free_verts[idx[i]];
            while (fi < forced.size() && forced[fi] < v) s.merged.push_back(forced[fi++]);
            s.merged.push_back(v);
        }
        while (fi < forced.size()) s.merged.push_back(forced[fi++]);

        if (feasible(ctx, s.merged, s)) return VertexSet(s.merged);

        // Advance the odometer over positions 1..pick-1 (position 0 is the
        // stratum key and stays fixed).
        int i = pick - 1;
        while (i >= 1 && idx[i] == fn - (pick - i)) --i;
        if (i < 1) return std::nullopt;
        ++idx[i];
        for (int j = i + 1; j < pick; ++j) idx[j] = idx[j - 1] + 1;
    }
}

std::optional<VertexSet> search_cardinality(const Ctx& ctx, const VertexSet& forced,
                                            const std::vector<int>& free_verts,
                                            int cardinality, int threads) {
    const int pick = cardinality - static_cast<int>(forced.size());
    if (pick < 0) return std::nullopt;
    if (pick == 0) {
        Scratch s;
        s.merged = forced;
        if (feasible(ctx, s.merged, s)) return forced;
        return std::nullopt;
    }
    const int fn = static_cast<int>(free_verts.size());
    if (pick > fn) return std::nullopt;

    const int strata = fn - pick + 1;
    if (threads <= 1 || strata == 1) {
        Scratch s;
        for (int f = 0; f < strata; ++f)
            if (auto r = scan_stratum(ctx, forced, free_verts, f, pick, s)) return r;
        return std::nullopt;
    }

    // Strata are claimed dynamically; the winner is the smallest stratum
    // holding a feasible set, so the lexicographic-minimum contract is
    // independent of scheduling.
    std::vector<std::optional<VertexSet>> results(strata);
    std::atomic<int> next{0};
    std::atomic<int> best{INT_MAX};
    auto worker = [&]() {
        Scratch s;
        while (true) {
            int f = next.fetch_add(1);
            if (f >= strata) break;
            if (f > best.load(std::memory_order_relaxed)) continue;
            if (auto r = scan_stratum(ctx, forced, free_verts, f, pick, s)) {
                results[f] = std::move(r);
                int cur = best.load();
                while (f < cur && !best.compare_exchange_weak(cur, f)) {
                }
            }
        }
    };
    std::vector<std::thread> pool;
    const int nt = std::min(threads, strata);
    pool.reserve(nt);
    for (int i = 0; i < nt; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& r : results)
        if (r) return r;
    return std::nullopt;
}

// Any resolving-type set must keep all but one member of every twin class:
// two twins left outside have identical distance vectors (and identical
// k-neighborhood traces), which no other vertex can separate.
int twin_lower_bound(const Graph& g) {
    int lb = 0;
    for (const auto& cls : twin_classes(g)) lb += static_cast<int>(cls.size()) - 1;
    return lb;
}

int lower_bound_for(const Ctx& ctx, const Graph& g, const VertexSet& forced) {
    int lb = static_cast<int>(forced.size());
    if (ctx.need_res || ctx.need_ld) lb = std::max(lb, twin_lower_bound(g));
    if (ctx.need_dom || ctx.need_ld) {
        // Each member covers at most the largest k-ball.
        int max_ball = 1;
        for (int v = 0; v < ctx.n; ++v) max_ball = std::max(max_ball, mask_count(ctx.ball[v]));
        lb = std::max(lb, (ctx.n + max_ball - 1) / max_ball);
    }
    if (ctx.need_ld) {
        // Traces are distinct nonempty subsets of the chosen set, so a set of
        // size c serves at most 2^c - 1 outside vertices.
        int c = lb;
        while (c < ctx.n) {
            std::uint64_t capacity =
                c >= 63 ? ~std::uint64_t{0} : (std::uint64_t{1} << c) - 1;
            if (capacity >= static_cast<std::uint64_t>(ctx.n - c)) break;
            ++c;
        }
        lb = c;
    }
    return lb;
}

void validate_search(const Graph& g, SetPredicate pred, std::optional<int> k,
                     const SearchOptions& opts) {
    if (g.order() == 0) throw DomainError("search requires a nonempty graph");
    if (opts.cap < 1 || opts.cap > 256)
        throw DomainError("cap must lie in [1, 256]");
    if (g.order() > opts.cap)
        throw SizeCapError("graph order " + std::to_string(g.order()) +
                           " exceeds the search cap " + std::to_string(opts.cap));
    if (opts.threads < 1) throw DomainError("threads must be >= 1");
    if (pred == SetPredicate::Resolving) {
        if (k.has_value())
            throw DomainError("the resolving predicate takes no k");
    } else {
        if (!k.has_value() || *k < 1)
            throw DomainError("predicate requires k >= 1");
    }
    validate_vertex_set(opts.forced, g.order(), "forced set");
    if (!opts.allow_disconnected && !is_connected(g))
        throw ConnectivityError("search requires a connected graph");
}

WitnessedInvariant minimum_set_impl(const Graph& g, const DistanceMatrix& dm,
                                    SetPredicate pred, std::optional<int> k,
                                    const SearchOptions& opts) {
    const int n = g.order();
    Ctx ctx = make_ctx(g, dm, pred, k.value_or(0));

    std::vector<int> free_verts;
    free_verts.reserve(n);
    {
        std::size_t fi = 0;
        for (int v = 0; v < n; ++v) {
            if (fi < opts.forced.size() && opts.forced[fi] == v) {
                ++fi;
                continue;
            }
            free_verts.push_back(v);
        }
    }

    for (int c = lower_bound_for(ctx, g, opts.forced); c <= n; ++c) {
        if (auto witness = search_cardinality(ctx, opts.forced, free_verts, c,
                                              opts.threads)) {
            WitnessedInvariant out;
            out.name = invariant_for(pred);
            if (pred != SetPredicate::Resolving) out.k = k;
            out.value = c;
            out.witness = std::move(*witness);
            return out;
        }
    }
    // The full vertex set satisfies every predicate vacuously.
    throw DomainError("search failed to terminate on the full vertex set");
}

}  // namespace

bool is_distance_k_dominating(const Graph& g, const DistanceMatrix& dm,
                              const VertexSet& s, int k) {
    if (k < 1) throw DomainError("k must be >= 1");
    if (dm.n() != g.order()) throw DomainError("distance matrix does not match graph");
    validate_vertex_set(s, g.order(), "candidate set");
    std::vector<char> in(g.order(), 0);
    for (int v : s) in[v] = 1;
    for (int v = 0; v < g.order(); ++v) {
        if (in[v]) continue;
        bool dominated = false;
        for (int x : s) {
            if (dm.within(v, x, k)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) return false;
    }
    return true;
}

bool is_resolving(const Graph& g, const DistanceMatrix& dm, const VertexSet& w) {
    if (dm.n() != g.order()) throw DomainError("distance matrix does not match graph");
    if (!is_connected(g)) throw ConnectivityError("resolving test requires a connected graph");
    validate_vertex_set(w, g.order(), "candidate set");
    std::vector<char> in(g.order(), 0);
    for (int v : w) in[v] = 1;
    std::vector<std::vector<int>> sigs;
    for (int v = 0; v < g.order(); ++v) {
        if (in[v]) continue;
        std::vector<int> sig;
        sig.reserve(w.size());
        for (int x : w) sig.push_back(dm.at(v, x));
        sigs.push_back(std::move(sig));
    }
    std::sort(sigs.begin(), sigs.end());
    return std::adjacent_find(sigs.begin(), sigs.end()) == sigs.end();
}

bool is_k_locating_dominating(const Graph& g, const DistanceMatrix& dm,
                              const VertexSet& x, int k) {
    if (k < 1) throw DomainError("k must be >= 1");
    if (dm.n() != g.order()) throw DomainError("distance matrix does not match graph");
    if (!is_connected(g))
        throw ConnectivityError("locating-domination test requires a connected graph");
    validate_vertex_set(x, g.order(), "candidate set");
    std::vector<char> in(g.order(), 0);
    for (int v : x) in[v] = 1;
    std::vector<std::vector<int>> traces;
    for (int v = 0; v < g.order(); ++v) {
        if (in[v]) continue;
        std::vector<int> trace;
        for (int u : x) {
            int d = dm.at(v, u);
            if (d != UNREACHABLE && d > 0 && d <= k) trace.push_back(u);
        }
        if (trace.empty()) return false;
        traces.push_back(std::move(trace));
    }
    std::sort(traces.begin(), traces.end());
    return std::adjacent_find(traces.begin(), traces.end()) == traces.end();
}

WitnessedInvariant minimum_set(const Graph& g, SetPredicate predicate,
                               std::optional<int> k, const SearchOptions& opts) {
    validate_search(g, predicate, k, opts);
    DistanceMatrix dm = all_pairs_distances(g);
    return minimum_set_impl(g, dm, predicate, k, opts);
}

std::vector<WitnessedInvariant> all_invariants(const Graph& g, int k,
                                               const SearchOptions& opts) {
    if (k < 1) throw DomainError("k must be >= 1");
    static const SetPredicate order[] = {
        SetPredicate::Resolving, SetPredicate::KDominating,
        SetPredicate::KResolvingDominating, SetPredicate::KLocatingDominating};
    auto k_for = [k](SetPredicate p) {
        std::optional<int> pk;
        if (p != SetPredicate::Resolving) pk = k;
        return pk;
    };
    for (SetPredicate p : order) validate_search(g, p, k_for(p), opts);
    DistanceMatrix dm = all_pairs_distances(g);
    std::vector<WitnessedInvariant> out;
    out.reserve(4);
    for (SetPredicate p : order) {
        out.push_back(minimum_set_impl(g, dm, p, k_for(p), opts));
    }
    return out;
}

}  // namespace rdom

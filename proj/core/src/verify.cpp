#include "rdom/verify.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cctype>
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <iterator>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rdom/edge_list.hpp"
#include "rdom/families.hpp"
#include "rdom/solvers.hpp"

namespace rdom {

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

void enumerate_labeled_graphs(int n,
                              const std::function<void(const Graph&)>& fn) {
    if (n < 1 || n > 7)
        throw DomainError("graph enumeration supports 1 <= n <= 7");
    std::vector<std::pair<int, int>> pos;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pos.emplace_back(u, v);
    const int pairs = static_cast<int>(pos.size());
    std::vector<std::pair<int, int>> edges;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) {
        edges.clear();
        for (int b = 0; b < pairs; ++b)
            if ((mask >> b) & 1u) edges.push_back(pos[b]);
        fn(Graph(n, edges));
    }
}

void enumerate_connected_graphs(int n,
                                const std::function<void(const Graph&)>& fn) {
    enumerate_labeled_graphs(n, [&](const Graph& g) {
        if (is_connected(g)) fn(g);
    });
}

long long count_connected_graphs(int n) {
    long long count = 0;
    enumerate_connected_graphs(n, [&](const Graph&) { ++count; });
    return count;
}

Graph random_connected_graph(int n, double p, unsigned long long seed) {
    if (n < 1) throw DomainError("random graph requires n >= 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("edge probability must lie in [0, 1]");
    std::mt19937_64 rng(seed);
    // Engine output is pinned by the standard; the acceptance test below is
    // a plain 53-bit threshold so results do not depend on the library's
    // distribution implementations.
    const std::uint64_t threshold =
        static_cast<std::uint64_t>(p * 9007199254740992.0);  // p * 2^53
    auto flip = [&]() { return (rng() >> 11) < threshold; };

    std::vector<std::pair<int, int>> edges;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        edges.clear();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (flip()) edges.emplace_back(u, v);
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
    // Dense-enough samples never reach this; for tiny p, fall back to a
    // random spanning tree plus independently sampled extra edges.
    std::set<std::pair<int, int>> tree;
    for (int v = 1; v < n; ++v) {
        int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
        tree.emplace(u, v);
    }
    edges.assign(tree.begin(), tree.end());
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!tree.count({u, v}) && flip()) edges.emplace_back(u, v);
    return Graph(n, edges);
}

// ---------------------------------------------------------------------------
// Row plumbing
// ---------------------------------------------------------------------------

namespace {

using Clock = std::chrono::steady_clock;
using Params = std::vector<std::pair<std::string, std::string>>;
using KV = std::vector<std::pair<std::string, std::string>>;

std::string istr(long long v) { return std::to_string(v); }

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() -
                                                                 t0)
        .count();
}

// Accumulates one row's verdict over many corpus elements: SKIPPED when
// nothing was in the claim's domain, FAIL with the first counterexample
// otherwise.
struct RowAcc {
    long long evaluated = 0;
    std::optional<Counterexample> bad;

    void count() { ++evaluated; }
    bool failed() const { return bad.has_value(); }
    void fail(const Graph& g, KV computed, KV expected) {
        if (bad) return;
        Counterexample c;
        c.graph_edge_list = to_edge_list(g);
        c.computed = std::move(computed);
        c.expected = std::move(expected);
        bad = std::move(c);
    }
};

CheckResult finish_row(const std::string& id, Params params, RowAcc& acc,
                       Clock::time_point t0) {
    CheckResult r;
    r.check_id = id;
    r.params = std::move(params);
    if (acc.bad) {
        r.status = CheckStatus::Fail;
        r.counterexample = std::move(acc.bad);
    } else if (acc.evaluated == 0) {
        r.status = CheckStatus::Skipped;
    } else {
        r.status = CheckStatus::Pass;
    }
    r.elapsed_ms = ms_since(t0);
    return r;
}

CheckResult skipped_row(const std::string& id, Params params) {
    CheckResult r;
    r.check_id = id;
    r.params = std::move(params);
    r.status = CheckStatus::Skipped;
    return r;
}

// Deterministic per-graph seed for RANDOM corpora.
std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, int n, std::size_t p_index,
                          int i) {
    return mix64(base ^ mix64((static_cast<std::uint64_t>(n) << 32) ^
                              (static_cast<std::uint64_t>(p_index) << 16) ^
                              static_cast<std::uint64_t>(i)));
}

// ---------------------------------------------------------------------------
// Solver shorthands
// ---------------------------------------------------------------------------

SearchOptions solver_opts(const Graph& g, const VerifyOptions& o,
                          bool allow_disconnected = false) {
    SearchOptions so;
    so.cap = std::max(o.solver_cap, g.order());
    so.threads = g.order() > 16 ? o.threads : 1;
    so.allow_disconnected = allow_disconnected;
    return so;
}

int dim_of(const Graph& g, const VerifyOptions& o) {
    return minimum_set(g, SetPredicate::Resolving, std::nullopt,
                       solver_opts(g, o))
        .value;
}

int gamma_k_of(const Graph& g, int k, const VerifyOptions& o) {
    return minimum_set(g, SetPredicate::KDominating, k, solver_opts(g, o))
        .value;
}

int gamma_rk_of(const Graph& g, int k, const VerifyOptions& o,
                bool allow_disconnected = false) {
    return minimum_set(g, SetPredicate::KResolvingDominating, k,
                       solver_opts(g, o, allow_disconnected))
        .value;
}

int ld_k_of(const Graph& g, int k, const VerifyOptions& o) {
    return minimum_set(g, SetPredicate::KLocatingDominating, k,
                       solver_opts(g, o))
        .value;
}

bool is_path_shape(const Graph& g) {
    if (!is_connected(g)) return false;
    if (g.size() != g.order() - 1) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

bool iso_member(const Graph& g, const std::vector<Graph>& catalog) {
    for (const Graph& c : catalog)
        if (is_isomorphic(g, c)) return true;
    return false;
}

// Visit all strictly increasing index vectors of size c from {0..n-1}; stop
// early when f returns true. Returns whether any call returned true.
template <typename F>
bool any_subset(int n, int c, F f) {
    if (c > n) return false;
    std::vector<int> idx(c);
    for (int i = 0; i < c; ++i) idx[i] = i;
    while (true) {
        if (f(idx)) return true;
        int j = c - 1;
        while (j >= 0 && idx[j] == n - c + j) --j;
        if (j < 0) return false;
        ++idx[j];
        for (int j2 = j + 1; j2 < c; ++j2) idx[j2] = idx[j2 - 1] + 1;
    }
}

// ---------------------------------------------------------------------------
// Shared row driver for bound-style checks (support EXHAUSTIVE and RANDOM)
// ---------------------------------------------------------------------------

template <typename Body>  // void(const Graph&, int k, RowAcc&)
void bound_rows(std::vector<CheckResult>& out, const std::string& id,
                const CorpusSpec& c, int k_min, int k_max, Body body) {
    for (int k = k_min; k <= k_max; ++k) {
        if (c.kind == CorpusKind::Random) {
            for (int n = c.n_min; n <= c.n_max; ++n) {
                for (std::size_t pi = 0; pi < c.edge_probabilities.size();
                     ++pi) {
                    const std::string& ps = c.edge_probabilities[pi];
                    const double p = std::stod(ps);
                    auto t0 = Clock::now();
                    RowAcc acc;
                    for (int i = 0; i < c.count && !acc.failed(); ++i) {
                        Graph g = random_connected_graph(
                            n, p, derive_seed(c.seed, n, pi, i));
                        body(g, k, acc);
                    }
                    out.push_back(finish_row(
                        id, {{"k", istr(k)}, {"n", istr(n)}, {"p", ps}}, acc,
                        t0));
                }
            }
        } else {
            for (int n = c.n_min; n <= c.n_max; ++n) {
                auto t0 = Clock::now();
                RowAcc acc;
                enumerate_connected_graphs(n, [&](const Graph& g) {
                    if (acc.failed()) return;
                    body(g, k, acc);
                });
                out.push_back(
                    finish_row(id, {{"k", istr(k)}, {"n", istr(n)}}, acc, t0));
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Checks
// ---------------------------------------------------------------------------

// max{gamma_k, dim} <= gamma_rk <= min{gamma_k + dim, n-1}; the n-1 clause
// applies for n >= 2.
std::vector<CheckResult> run_chk_sandwich(const CorpusSpec& c, int k_min,
                                          int k_max, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    bound_rows(out, "chk_sandwich", c, k_min, k_max,
               [&](const Graph& g, int k, RowAcc& acc) {
                   const int n = g.order();
                   const int dim = dim_of(g, o);
                   const int gk = gamma_k_of(g, k, o);
                   const int grk = gamma_rk_of(g, k, o) +
                                   o.fault_injection_delta;
                   acc.count();
                   int lower = std::max(gk, dim);
                   int upper = gk + dim;
                   if (n >= 2) upper = std::min(upper, n - 1);
                   if (grk < lower || grk > upper)
                       acc.fail(g,
                                {{"dim", istr(dim)},
                                 {"gamma_k", istr(gk)},
                                 {"gamma_rk", istr(grk)}},
                                {{"gamma_rk_min", istr(lower)},
                                 {"gamma_rk_max", istr(upper)}});
               });
    return out;
}

// k >= diam  implies  gamma_rk = dim  (n >= 2).
std::vector<CheckResult> run_chk_diam_collapse(const CorpusSpec& c, int k_min,
                                               int k_max,
                                               const VerifyOptions& o) {
    std::vector<CheckResult> out;
    bound_rows(out, "chk_diam_collapse", c, k_min, k_max,
               [&](const Graph& g, int k, RowAcc& acc) {
                   if (g.order() < 2) return;
                   GraphMetrics m = metrics(g);
                   if (!m.diameter || k < *m.diameter) return;
                   acc.count();
                   const int dim = dim_of(g, o);
                   const int grk = gamma_rk_of(g, k, o);
                   if (grk != dim)
                       acc.fail(g,
                                {{"diameter", istr(*m.diameter)},
                                 {"dim", istr(dim)},
                                 {"gamma_rk", istr(grk)}},
                                {{"gamma_rk", istr(dim)}});
               });
    return out;
}

// Closed form for gamma_rk on paths.
std::vector<CheckResult> run_chk_path_formula(const CorpusSpec& c, int k_min,
                                              int k_max,
                                              const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            if (n < 2) {
                out.push_back(skipped_row("chk_path_formula", std::move(prm)));
                continue;
            }
            auto t0 = Clock::now();
            RowAcc acc;
            Graph g = path_graph(n);
            const int grk = gamma_rk_of(g, k, o);
            const int pred = predicted_gamma_rk_path(n, k);
            acc.count();
            if (grk != pred)
                acc.fail(g, {{"gamma_rk", istr(grk)}},
                         {{"gamma_rk", istr(pred)}});
            out.push_back(finish_row("chk_path_formula", std::move(prm), acc,
                                     t0));
        }
    }
    return out;
}

// Closed form for gamma_rk on cycles.
std::vector<CheckResult> run_chk_cycle_formula(const CorpusSpec& c, int k_min,
                                               int k_max,
                                               const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            if (n < 3) {
                out.push_back(skipped_row("chk_cycle_formula", std::move(prm)));
                continue;
            }
            auto t0 = Clock::now();
            RowAcc acc;
            Graph g = cycle_graph(n);
            const int grk = gamma_rk_of(g, k, o);
            const int pred = predicted_gamma_rk_cycle(n, k);
            acc.count();
            if (grk != pred)
                acc.fail(g, {{"gamma_rk", istr(grk)}},
                         {{"gamma_rk", istr(pred)}});
            out.push_back(finish_row("chk_cycle_formula", std::move(prm), acc,
                                     t0));
        }
    }
    return out;
}

// {0, 2k+1} resolves C_n iff n != 4k+2   (n >= 2k+2).
std::vector<CheckResult> run_chk_cycle_resolving(const CorpusSpec& c,
                                                 int k_min, int k_max,
                                                 const VerifyOptions&) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            if (n < 2 * k + 2) {
                out.push_back(
                    skipped_row("chk_cycle_resolving", std::move(prm)));
                continue;
            }
            auto t0 = Clock::now();
            RowAcc acc;
            Graph g = cycle_graph(n);
            DistanceMatrix dm = all_pairs_distances(g);
            const VertexSet w{0, 2 * k + 1};
            const bool resolving = is_resolving(g, dm, w);
            const bool expected = (n != 4 * k + 2);
            acc.count();
            if (resolving != expected)
                acc.fail(g, {{"resolving", istr(resolving ? 1 : 0)}},
                         {{"resolving", istr(expected ? 1 : 0)}});
            out.push_back(finish_row("chk_cycle_resolving", std::move(prm),
                                     acc, t0));
        }
    }
    return out;
}

// rad <= k or diam = k+1  implies  dim <= gamma_rk <= dim + 1.
std::vector<CheckResult> run_chk_radius_plus1(const CorpusSpec& c, int k_min,
                                              int k_max,
                                              const VerifyOptions& o) {
    std::vector<CheckResult> out;
    bound_rows(out, "chk_radius_plus1", c, k_min, k_max,
               [&](const Graph& g, int k, RowAcc& acc) {
                   GraphMetrics m = metrics(g);
                   if (!m.radius) return;
                   if (!(*m.radius <= k || *m.diameter == k + 1)) return;
                   acc.count();
                   const int dim = dim_of(g, o);
                   const int grk = gamma_rk_of(g, k, o);
                   if (grk < dim || grk > dim + 1)
                       acc.fail(g,
                                {{"radius", istr(*m.radius)},
                                 {"diameter", istr(*m.diameter)},
                                 {"dim", istr(dim)},
                                 {"gamma_rk", istr(grk)}},
                                {{"gamma_rk_min", istr(dim)},
                                 {"gamma_rk_max", istr(dim + 1)}});
               });
    return out;
}

// gamma_rk <= n - k*gamma_k  (n >= k+1, diam >= k), plus equality rows on the
// comb trees regardless of corpus kind.
std::vector<CheckResult> run_chk_nk_upper(const CorpusSpec& c, int k_min,
                                          int k_max, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    bound_rows(out, "chk_nk_upper", c, k_min, k_max,
               [&](const Graph& g, int k, RowAcc& acc) {
                   const int n = g.order();
                   if (n < k + 1) return;
                   GraphMetrics m = metrics(g);
                   if (!m.diameter || *m.diameter < k) return;
                   acc.count();
                   const int gk = gamma_k_of(g, k, o);
                   const int grk = gamma_rk_of(g, k, o);
                   if (grk > n - k * gk)
                       acc.fail(g,
                                {{"gamma_k", istr(gk)},
                                 {"gamma_rk", istr(grk)}},
                                {{"gamma_rk_max", istr(n - k * gk)}});
               });
    for (int k = k_min; k <= k_max; ++k) {
        for (int gamma = 2; gamma <= c.gamma_max; ++gamma) {
            FamilyParams fp;
            fp.family = Family::TGamma;
            fp.k = k;
            fp.gamma = gamma;
            Graph t = generate_family(fp);
            const int n = t.order();
            Params prm{{"k", istr(k)},
                       {"family", "t_gamma"},
                       {"gamma", istr(gamma)},
                       {"n", istr(n)}};
            auto t0 = Clock::now();
            RowAcc acc;
            const int gk = gamma_k_of(t, k, o);
            const int grk = gamma_rk_of(t, k, o);
            acc.count();
            if (gk != gamma || grk != n - k * gamma)
                acc.fail(t,
                         {{"gamma_k", istr(gk)}, {"gamma_rk", istr(grk)}},
                         {{"gamma_k", istr(gamma)},
                          {"gamma_rk", istr(n - k * gamma)}});
            out.push_back(finish_row("chk_nk_upper", std::move(prm), acc, t0));
        }
    }
    return out;
}

// Diameter-based upper bounds, split by how d compares with k.
std::vector<CheckResult> run_chk_diam_upper(const CorpusSpec& c, int k_min,
                                            int k_max,
                                            const VerifyOptions& o) {
    std::vector<CheckResult> out;
    bound_rows(out, "chk_diam_upper", c, k_min, k_max,
               [&](const Graph& g, int k, RowAcc& acc) {
                   GraphMetrics m = metrics(g);
                   if (!m.diameter) return;
                   const int n = g.order();
                   const int d = *m.diameter;
                   int bound;
                   if (d <= k)
                       bound = n - d;
                   else if (d <= 2 * k)
                       bound = n - d + 1;
                   else
                       bound = n - d + d / (2 * k + 1);
                   acc.count();
                   const int grk = gamma_rk_of(g, k, o);
                   if (grk > bound)
                       acc.fail(g,
                                {{"diameter", istr(d)},
                                 {"gamma_rk", istr(grk)}},
                                {{"gamma_rk_max", istr(bound)}});
               });
    return out;
}

// (2k+1)*gamma_rk >= diam+1, >= 2*rad, >= girth (when finite).
std::vector<CheckResult> run_chk_lower_trio(const CorpusSpec& c, int k_min,
                                            int k_max,
                                            const VerifyOptions& o) {
    std::vector<CheckResult> out;
    bound_rows(out, "chk_lower_trio", c, k_min, k_max,
               [&](const Graph& g, int k, RowAcc& acc) {
                   GraphMetrics m = metrics(g);
                   if (!m.diameter) return;
                   acc.count();
                   const int grk = gamma_rk_of(g, k, o);
                   const int v = (2 * k + 1) * grk;
                   long long need = std::max<long long>(*m.diameter + 1,
                                                        2LL * *m.radius);
                   if (m.girth) need = std::max(need, (long long)*m.girth);
                   if (v < need) {
                       KV computed{{"gamma_rk", istr(grk)},
                                   {"diameter", istr(*m.diameter)},
                                   {"radius", istr(*m.radius)}};
                       if (m.girth)
                           computed.emplace_back("girth", istr(*m.girth));
                       acc.fail(g, std::move(computed),
                                {{"scaled_gamma_rk_min", istr(need)}});
                   }
               });
    return out;
}

// gamma_rk = n-i  iff  dim = n-i, for non-paths with k >= 2, 1 <= i <= k,
// n >= i+2.
std::vector<CheckResult> run_chk_lem22(const CorpusSpec& c, int k_min,
                                       int k_max, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = c.n_min; n <= c.n_max; ++n) {
            for (int i = 1; i <= std::max(k, 1); ++i) {
                Params prm{{"k", istr(k)}, {"n", istr(n)}, {"i", istr(i)}};
                if (k < 2 || n < i + 2) {
                    out.push_back(skipped_row("chk_lem22", std::move(prm)));
                    continue;
                }
                auto t0 = Clock::now();
                RowAcc acc;
                enumerate_connected_graphs(n, [&](const Graph& g) {
                    if (acc.failed()) return;
                    if (is_path_shape(g)) return;
                    acc.count();
                    const int dim = dim_of(g, o);
                    const int grk = gamma_rk_of(g, k, o);
                    if ((grk == n - i) != (dim == n - i))
                        acc.fail(g,
                                 {{"dim", istr(dim)},
                                  {"gamma_rk", istr(grk)}},
                                 {{"equivalence",
                                   "gamma_rk = n-i iff dim = n-i"}});
                });
                out.push_back(finish_row("chk_lem22", std::move(prm), acc,
                                         t0));
            }
        }
    }
    return out;
}

// gamma_rk = 1  iff  G is a path of order <= k+1   (n >= 2).
std::vector<CheckResult> run_chk_char1(const CorpusSpec& c, int k_min,
                                       int k_max, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            auto t0 = Clock::now();
            RowAcc acc;
            enumerate_connected_graphs(n, [&](const Graph& g) {
                if (acc.failed()) return;
                if (n < 2) return;
                acc.count();
                const int grk = gamma_rk_of(g, k, o);
                const bool member = is_path_shape(g) && n <= k + 1;
                if ((grk == 1) != member)
                    acc.fail(g, {{"gamma_rk", istr(grk)}},
                             {{"equivalence",
                               "gamma_rk = 1 iff path of order <= k+1"}});
            });
            out.push_back(finish_row("chk_char1", std::move(prm), acc, t0));
        }
    }
    return out;
}

// gamma_rk = n-2 characterization: at k = 2 the graphs are P_4, the complete
// bipartite graphs, K_s + complement(K_t) (t >= 2) and K_s + (K_1 u K_t);
// at k >= 3 the same list without P_4. Connected, n >= 4.
std::vector<CheckResult> run_chk_char_n2(const CorpusSpec& c, int k_min,
                                         int k_max, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            if (k < 2 || n < 4) {
                out.push_back(skipped_row("chk_char_n2", std::move(prm)));
                continue;
            }
            std::vector<Graph> catalog;
            if (k == 2 && n == 4) catalog.push_back(path_graph(4));
            for (int s = 1; s <= n - 1; ++s)
                catalog.push_back(complete_bipartite_graph(s, n - s));
            for (int s = 1; s <= n - 2; ++s)
                catalog.push_back(join(complete_graph(s), Graph(n - s)));
            for (int s = 1; s <= n - 2; ++s) {
                const int t = n - 1 - s;
                if (t < 1) continue;
                catalog.push_back(join(
                    complete_graph(s),
                    disjoint_union(Graph(1), complete_graph(t))));
            }
            auto t0 = Clock::now();
            RowAcc acc;
            enumerate_connected_graphs(n, [&](const Graph& g) {
                if (acc.failed()) return;
                acc.count();
                const int grk = gamma_rk_of(g, k, o);
                const bool member = iso_member(g, catalog);
                if ((grk == n - 2) != member)
                    acc.fail(g,
                             {{"gamma_rk", istr(grk)},
                              {"catalog_member", istr(member ? 1 : 0)}},
                             {{"equivalence",
                               "gamma_rk = n-2 iff catalog member"}});
            });
            out.push_back(finish_row("chk_char_n2", std::move(prm), acc, t0));
        }
    }
    return out;
}

// gamma_rk = n-1  iff  G is complete   (k >= 2, n >= 2).
std::vector<CheckResult> run_chk_char_n1(const CorpusSpec& c, int k_min,
                                         int k_max, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            if (k < 2) {
                out.push_back(skipped_row("chk_char_n1", std::move(prm)));
                continue;
            }
            auto t0 = Clock::now();
            RowAcc acc;
            enumerate_connected_graphs(n, [&](const Graph& g) {
                if (acc.failed()) return;
                if (n < 2) return;
                acc.count();
                const int grk = gamma_rk_of(g, k, o);
                const bool complete = g.size() == n * (n - 1) / 2;
                if ((grk == n - 1) != complete)
                    acc.fail(g, {{"gamma_rk", istr(grk)}},
                             {{"equivalence",
                               "gamma_rk = n-1 iff complete"}});
            });
            out.push_back(finish_row("chk_char_n1", std::move(prm), acc, t0));
        }
    }
    return out;
}

// Prescribed triples: construct and certify every realizable
// (dim, gamma_k, gamma_rk) target in range, confirm the infeasible shapes
// are rejected, and scan the exhaustive corpus for the impossible shape.
std::vector<CheckResult> run_chk_triples(const CorpusSpec& c, int k_min,
                                         int k_max, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int beta = 1; beta <= c.beta_max; ++beta) {
            for (int gamma = 1; gamma <= c.gamma_max; ++gamma) {
                for (int alpha = 1; alpha <= c.alpha_max; ++alpha) {
                    Params prm{{"k", istr(k)},
                               {"beta", istr(beta)},
                               {"gamma", istr(gamma)},
                               {"alpha", istr(alpha)}};
                    if (k < 2) {
                        out.push_back(
                            skipped_row("chk_triples", std::move(prm)));
                        continue;
                    }
                    auto t0 = Clock::now();
                    RowAcc acc;
                    TripleTarget t;
                    t.k = k;
                    t.beta = beta;
                    t.gamma = gamma;
                    t.alpha = alpha;
                    if (!triple_is_realizable(t)) {
                        bool rejected = false;
                        try {
                            Graph g = realize_triple(t);
                            acc.count();
                            acc.fail(g, {{"realized", "1"}},
                                     {{"realize_triple",
                                       "InfeasibleTripleError"}});
                        } catch (const InfeasibleTripleError&) {
                            rejected = true;
                        }
                        if (rejected) acc.count();
                        out.push_back(finish_row("chk_triples",
                                                 std::move(prm), acc, t0));
                        continue;
                    }
                    Graph g = realize_triple(t);
                    if (g.order() > c.order_cap) {
                        out.push_back(
                            skipped_row("chk_triples", std::move(prm)));
                        continue;
                    }
                    acc.count();
                    const bool tree =
                        is_connected(g) && g.size() == g.order() - 1;
                    const int dim = dim_of(g, o);
                    const int gk = gamma_k_of(g, k, o);
                    const int grk = gamma_rk_of(g, k, o);
                    if (!tree || dim != beta || gk != gamma || grk != alpha)
                        acc.fail(g,
                                 {{"tree", istr(tree ? 1 : 0)},
                                  {"dim", istr(dim)},
                                  {"gamma_k", istr(gk)},
                                  {"gamma_rk", istr(grk)}},
                                 {{"tree", "1"},
                                  {"dim", istr(beta)},
                                  {"gamma_k", istr(gamma)},
                                  {"gamma_rk", istr(alpha)}});
                    out.push_back(finish_row("chk_triples", std::move(prm),
                                             acc, t0));
                }
            }
        }
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            if (k < 2) {
                out.push_back(skipped_row("chk_triples", std::move(prm)));
                continue;
            }
            auto t0 = Clock::now();
            RowAcc acc;
            enumerate_connected_graphs(n, [&](const Graph& g) {
                if (acc.failed()) return;
                acc.count();
                const int dim = dim_of(g, o);
                const int gk = gamma_k_of(g, k, o);
                const int grk = gamma_rk_of(g, k, o);
                if (dim == 1 && gk >= 2 && grk == gk + 1)
                    acc.fail(g,
                             {{"dim", istr(dim)},
                              {"gamma_k", istr(gk)},
                              {"gamma_rk", istr(grk)}},
                             {{"shape",
                               "no graph with dim=1, gamma_k>=2, "
                               "gamma_rk=gamma_k+1"}});
            });
            out.push_back(finish_row("chk_triples", std::move(prm), acc, t0));
        }
    }
    return out;
}

// Extremal construction: order matches the closed form, the canonical r-set
// is a certified optimum (including infeasibility at r-1 by exhausting all
// smaller subsets through the definition-level predicates), the distance
// labels are as designed, and the whole corpus obeys the order bound.
std::vector<CheckResult> run_chk_maxorder(const CorpusSpec& c, int k_min,
                                          int k_max, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int r = 2; r <= c.r_max; ++r) {
            const long long order = predicted_max_order(k, r);
            Params prm{{"k", istr(k)}, {"r", istr(r)}, {"n", istr(order)}};
            if (order > c.order_cap) {
                out.push_back(skipped_row("chk_maxorder", std::move(prm)));
                continue;
            }
            auto t0 = Clock::now();
            RowAcc acc;
            Graph g = extremal_gr(k, r, c.order_cap);
            const std::vector<std::vector<int>> vecs =
                extremal_gr_vectors(k, r, c.order_cap);
            DistanceMatrix dm = all_pairs_distances(g);
            const int n = g.order();
            acc.count();

            VertexSet w(r);
            for (int i = 0; i < r; ++i) w[i] = i;
            const bool w_res = is_resolving(g, dm, w);
            const bool w_dom = is_distance_k_dominating(g, dm, w, k);

            bool labels_ok = true;
            for (int v = r; v < n && labels_ok; ++v)
                for (int i = 0; i < r && labels_ok; ++i)
                    labels_ok = dm.at(v, i) == vecs[v][i];

            const bool smaller_feasible = any_subset(
                n, r - 1, [&](const std::vector<int>& idx) {
                    VertexSet s(idx.begin(), idx.end());
                    return is_distance_k_dominating(g, dm, s, k) &&
                           is_resolving(g, dm, s);
                });

            const int solver_value =
                minimum_set(g, SetPredicate::KResolvingDominating, k,
                            solver_opts(g, o))
                    .value;

            if (n != order || !w_res || !w_dom || !labels_ok ||
                smaller_feasible || solver_value != r)
                acc.fail(g,
                         {{"order", istr(n)},
                          {"witness_resolving", istr(w_res ? 1 : 0)},
                          {"witness_dominating", istr(w_dom ? 1 : 0)},
                          {"anchor_distances_match",
                           istr(labels_ok ? 1 : 0)},
                          {"some_smaller_set_feasible",
                           istr(smaller_feasible ? 1 : 0)},
                          {"gamma_rk", istr(solver_value)}},
                         {{"order", istr(order)},
                          {"witness_resolving", "1"},
                          {"witness_dominating", "1"},
                          {"anchor_distances_match", "1"},
                          {"some_smaller_set_feasible", "0"},
                          {"gamma_rk", istr(r)}});
            out.push_back(finish_row("chk_maxorder", std::move(prm), acc, t0));
        }
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            auto t0 = Clock::now();
            RowAcc acc;
            enumerate_connected_graphs(n, [&](const Graph& g) {
                if (acc.failed()) return;
                acc.count();
                const int grk = gamma_rk_of(g, k, o);
                const long long bound = predicted_max_order(k, grk);
                if (n > bound)
                    acc.fail(g, {{"gamma_rk", istr(grk)}, {"n", istr(n)}},
                             {{"n_max", istr(bound)}});
            });
            out.push_back(finish_row("chk_maxorder", std::move(prm), acc, t0));
        }
    }
    return out;
}

// Shared implementation of the complement-pair checks over all labeled
// graphs. want_k2 selects the k = 2 statement; otherwise the k >= 3 one.
std::vector<CheckResult> ng_all_graphs(const std::string& id, bool want_k2,
                                       const CorpusSpec& c, int k_min,
                                       int k_max, const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        const bool k_ok = want_k2 ? (k == 2) : (k >= 3);
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            if (!k_ok || n < 2) {
                out.push_back(skipped_row(id, std::move(prm)));
                continue;
            }
            std::vector<Graph> low_catalog;
            if (want_k2 && n == 3) {
                low_catalog.push_back(path_graph(3));
                low_catalog.push_back(complement(path_graph(3)));
            }
            auto t0 = Clock::now();
            RowAcc acc;
            enumerate_labeled_graphs(n, [&](const Graph& g) {
                if (acc.failed()) return;
                acc.count();
                Graph comp = complement(g);
                const int a = gamma_rk_of(g, k, o, true);
                const int b = gamma_rk_of(comp, k, o, true);
                const long long sum = a + b;
                const long long prod =
                    static_cast<long long>(a) * b;
                const long long sum_lo = want_k2 ? 3 : 2;
                const long long prod_lo = want_k2 ? 2 : 1;
                const long long sum_hi = 2LL * n - 1;
                const long long prod_hi = static_cast<long long>(n) * (n - 1);
                // At k = 2 the lower attainers are K_2, its complement, P_3
                // and its complement; at k >= 3 the only one is P_4. Upper
                // attainers are the complete and the empty graph.
                bool low_member;
                if (want_k2)
                    low_member = (n == 2) || iso_member(g, low_catalog);
                else
                    low_member = n == 4 && is_isomorphic(g, path_graph(4));
                const bool up_member =
                    g.size() == 0 || g.size() == n * (n - 1) / 2;
                const bool ok = sum >= sum_lo && sum <= sum_hi &&
                                prod >= prod_lo && prod <= prod_hi &&
                                ((sum == sum_lo) == low_member) &&
                                ((prod == prod_lo) == low_member) &&
                                ((sum == sum_hi) == up_member) &&
                                ((prod == prod_hi) == up_member);
                if (!ok)
                    acc.fail(g,
                             {{"gamma_rk", istr(a)},
                              {"gamma_rk_complement", istr(b)},
                              {"sum", istr(sum)},
                              {"product", istr(prod)},
                              {"lower_catalog_member",
                               istr(low_member ? 1 : 0)},
                              {"upper_catalog_member",
                               istr(up_member ? 1 : 0)}},
                             {{"sum_range",
                               istr(sum_lo) + ".." + istr(sum_hi)},
                              {"product_range",
                               istr(prod_lo) + ".." + istr(prod_hi)},
                              {"equality",
                               "attained exactly on the catalogs"}});
            });
            out.push_back(finish_row(id, std::move(prm), acc, t0));
        }
    }
    return out;
}

std::vector<CheckResult> run_chk_ng2(const CorpusSpec& c, int k_min, int k_max,
                                     const VerifyOptions& o) {
    return ng_all_graphs("chk_ng2", true, c, k_min, k_max, o);
}

std::vector<CheckResult> run_chk_ngk(const CorpusSpec& c, int k_min, int k_max,
                                     const VerifyOptions& o) {
    return ng_all_graphs("chk_ngk", false, c, k_min, k_max, o);
}

// Both-connected refinement (n >= 4). At k = 2 the bounds are
// 4 <= sum <= 2n-4 and 4 <= prod <= (n-2)^2 with the upper bounds attained
// exactly on P_4. At k >= 3 they are 2 <= sum <= 2n-6 and 1 <= prod <=
// (n-3)^2; the lower bounds are attained exactly on P_4 and the upper ones
// exactly on a small catalog: P_4, C_5, the bull, the blow-ups of one end
// or one interior vertex of P_4 by a clique or an independent set, the
// blow-ups of an end plus its neighbor by cliques, and the blow-ups of both
// ends' non-adjacent pair by independent sets. At n = 5, k = 3 the catalog
// additionally contains P_5 and its complement: both sides then have value
// n - 3 = 2 through the path formula rather than through metric dimension,
// a case the clique/independent-set families cannot produce.
std::vector<CheckResult> run_chk_ng_connected(const CorpusSpec& c, int k_min,
                                              int k_max,
                                              const VerifyOptions& o) {
    std::vector<CheckResult> out;
    for (int k = k_min; k <= k_max; ++k) {
        for (int n = c.n_min; n <= c.n_max; ++n) {
            Params prm{{"k", istr(k)}, {"n", istr(n)}};
            if (k < 2 || n < 4) {
                out.push_back(skipped_row("chk_ng_connected", std::move(prm)));
                continue;
            }
            const Graph p4 = path_graph(4);
            std::vector<Graph> catalog;
            if (k >= 3) {
                if (n == 4) catalog.push_back(p4);
                if (n == 5) {
                    catalog.push_back(cycle_graph(5));
                    catalog.push_back(bull_graph());
                }
                const int t = n - 3;
                catalog.push_back(substitute(p4, {{0, complete_graph(t)}}));
                catalog.push_back(substitute(p4, {{0, Graph(t)}}));
                catalog.push_back(substitute(p4, {{1, complete_graph(t)}}));
                catalog.push_back(substitute(p4, {{1, Graph(t)}}));
                for (int rr = 1; rr <= n - 3; ++rr) {
                    catalog.push_back(
                        substitute(p4, {{0, complete_graph(rr)},
                                        {1, complete_graph(n - rr - 2)}}));
                    catalog.push_back(substitute(
                        p4, {{0, Graph(rr)}, {2, Graph(n - rr - 2)}}));
                }
                if (n == 5 && k == 3) {
                    catalog.push_back(path_graph(5));
                    catalog.push_back(complement(path_graph(5)));
                }
            }
            auto t0 = Clock::now();
            RowAcc acc;
            enumerate_connected_graphs(n, [&](const Graph& g) {
                if (acc.failed()) return;
                Graph comp = complement(g);
                if (!is_connected(comp)) return;
                acc.count();
                const int a = gamma_rk_of(g, k, o);
                const int b = gamma_rk_of(comp, k, o);
                const long long sum = a + b;
                const long long prod = static_cast<long long>(a) * b;
                bool ok;
                KV expected;
                if (k == 2) {
                    const long long sum_hi = 2LL * n - 4;
                    const long long prod_hi =
                        static_cast<long long>(n - 2) * (n - 2);
                    const bool is_p4 = n == 4 && is_isomorphic(g, p4);
                    ok = sum >= 4 && sum <= sum_hi && prod >= 4 &&
                         prod <= prod_hi && ((sum == sum_hi) == is_p4) &&
                         ((prod == prod_hi) == is_p4);
                    expected = {{"sum_range", "4.." + istr(sum_hi)},
                                {"product_range", "4.." + istr(prod_hi)},
                                {"upper_equality", "exactly P_4"}};
                } else {
                    const long long sum_hi = 2LL * n - 6;
                    const long long prod_hi =
                        static_cast<long long>(n - 3) * (n - 3);
                    const bool is_p4 = n == 4 && is_isomorphic(g, p4);
                    const bool member = iso_member(g, catalog);
                    ok = sum >= 2 && sum <= sum_hi && prod >= 1 &&
                         prod <= prod_hi && ((sum == 2) == is_p4) &&
                         ((prod == 1) == is_p4) &&
                         ((sum == sum_hi) == member) &&
                         ((prod == prod_hi) == member);
                    expected = {{"sum_range", "2.." + istr(sum_hi)},
                                {"product_range", "1.." + istr(prod_hi)},
                                {"lower_equality", "exactly P_4"},
                                {"upper_equality",
                                 "exactly the catalog members"}};
                }
                if (!ok)
                    acc.fail(g,
                             {{"gamma_rk", istr(a)},
                              {"gamma_rk_complement", istr(b)},
                              {"sum", istr(sum)},
                              {"product", istr(prod)}},
                             std::move(expected));
            });
            out.push_back(finish_row("chk_ng_connected", std::move(prm), acc,
                                     t0));
        }
    }
    return out;
}

// gamma_rk <= ld_k.
std::vector<CheckResult> run_chk_ld_dominates(const CorpusSpec& c, int k_min,
                                              int k_max,
                                              const VerifyOptions& o) {
    std::vector<CheckResult> out;
    bound_rows(out, "chk_ld_dominates", c, k_min, k_max,
               [&](const Graph& g, int k, RowAcc& acc) {
                   acc.count();
                   const int grk = gamma_rk_of(g, k, o);
                   const int ld = ld_k_of(g, k, o);
                   if (grk > ld)
                       acc.fail(g,
                                {{"gamma_rk", istr(grk)},
                                 {"ld_k", istr(ld)}},
                                {{"gamma_rk_max", istr(ld)}});
               });
    return out;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

using CheckFn = std::vector<CheckResult> (*)(const CorpusSpec&, int, int,
                                             const VerifyOptions&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
    static const std::vector<std::pair<std::string, CheckFn>> table = {
        {"chk_char1", run_chk_char1},
        {"chk_char_n1", run_chk_char_n1},
        {"chk_char_n2", run_chk_char_n2},
        {"chk_cycle_formula", run_chk_cycle_formula},
        {"chk_cycle_resolving", run_chk_cycle_resolving},
        {"chk_diam_collapse", run_chk_diam_collapse},
        {"chk_diam_upper", run_chk_diam_upper},
        {"chk_ld_dominates", run_chk_ld_dominates},
        {"chk_lem22", run_chk_lem22},
        {"chk_lower_trio", run_chk_lower_trio},
        {"chk_maxorder", run_chk_maxorder},
        {"chk_ng2", run_chk_ng2},
        {"chk_ng_connected", run_chk_ng_connected},
        {"chk_ngk", run_chk_ngk},
        {"chk_nk_upper", run_chk_nk_upper},
        {"chk_path_formula", run_chk_path_formula},
        {"chk_radius_plus1", run_chk_radius_plus1},
        {"chk_sandwich", run_chk_sandwich},
        {"chk_triples", run_chk_triples},
    };
    return table;
}

}  // namespace

const std::vector<std::string>& registered_checks() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        for (const auto& [id, fn] : registry()) v.push_back(id);
        return v;
    }();
    return ids;
}

bool is_registered_check(const std::string& check_id) {
    const auto& ids = registered_checks();
    return std::binary_search(ids.begin(), ids.end(), check_id);
}

// ---------------------------------------------------------------------------
// Presets
// ---------------------------------------------------------------------------

CheckPreset check_preset(const std::string& check_id, VerifyLevel level) {
    if (!is_registered_check(check_id))
        throw DomainError("unknown check id: " + check_id);
    const bool desk = level == VerifyLevel::Desk;
    CheckPreset p;
    CorpusSpec& c = p.corpus;
    // Exhaustive baseline shared by the bound and characterization checks.
    c.kind = CorpusKind::Exhaustive;
    c.n_min = 1;
    c.n_max = desk ? 6 : 5;
    p.k_min = 1;
    p.k_max = desk ? 3 : 2;

    if (check_id == "chk_path_formula") {
        c.kind = CorpusKind::Family;
        c.n_min = 2;
        c.n_max = desk ? 16 : 10;
        p.k_max = desk ? 4 : 2;
    } else if (check_id == "chk_cycle_formula") {
        c.kind = CorpusKind::Family;
        c.n_min = 3;
        c.n_max = desk ? 16 : 10;
    } else if (check_id == "chk_cycle_resolving") {
        c.kind = CorpusKind::Family;
        c.n_min = 3;
        c.n_max = desk ? 20 : 12;
        p.k_max = desk ? 4 : 2;
    } else if (check_id == "chk_lem22" || check_id == "chk_char_n2" ||
               check_id == "chk_char_n1") {
        p.k_min = 2;
        p.k_max = desk ? 3 : 2;
    } else if (check_id == "chk_triples") {
        c.kind = CorpusKind::Family;
        p.k_min = 2;
        p.k_max = desk ? 3 : 2;
        c.beta_max = desk ? 3 : 2;
        c.gamma_max = desk ? 3 : 2;
        c.alpha_max = desk ? 6 : 4;
        c.n_min = 1;
        c.n_max = desk ? 6 : 4;
    } else if (check_id == "chk_maxorder") {
        c.kind = CorpusKind::Family;
        c.r_max = desk ? 3 : 2;
        c.n_min = 1;
        c.n_max = desk ? 6 : 5;
    } else if (check_id == "chk_ng2") {
        c.n_min = 2;
        c.n_max = desk ? 6 : 4;
        p.k_min = 2;
        p.k_max = 2;
    } else if (check_id == "chk_ngk") {
        c.n_min = 2;
        c.n_max = desk ? 6 : 4;
        p.k_min = 3;
        p.k_max = 3;
    } else if (check_id == "chk_ng_connected") {
        c.n_min = 4;
        c.n_max = desk ? 6 : 5;
        p.k_min = 2;
        p.k_max = 3;
    }
    return p;
}

// ---------------------------------------------------------------------------
// Execution and reports
// ---------------------------------------------------------------------------

std::vector<CheckResult> run_check(const std::string& check_id,
                                   const CorpusSpec& corpus, int k_min,
                                   int k_max, const VerifyOptions& opts) {
    if (k_min < 1) throw DomainError("check k range requires k_min >= 1");
    if (opts.threads < 1) throw DomainError("threads must be >= 1");
    for (const auto& [id, fn] : registry())
        if (id == check_id) return fn(corpus, k_min, k_max, opts);
    throw DomainError("unknown check id: " + check_id);
}

namespace {

bool integer_like(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

int compare_values(const std::string& a, const std::string& b) {
    if (integer_like(a) && integer_like(b)) {
        long long x = std::stoll(a), y = std::stoll(b);
        return x < y ? -1 : (x > y ? 1 : 0);
    }
    return a < b ? -1 : (a > b ? 1 : 0);
}

bool row_less(const CheckResult& x, const CheckResult& y) {
    if (x.check_id != y.check_id) return x.check_id < y.check_id;
    const std::size_t m = std::min(x.params.size(), y.params.size());
    for (std::size_t i = 0; i < m; ++i) {
        if (x.params[i].first != y.params[i].first)
            return x.params[i].first < y.params[i].first;
        int c = compare_values(x.params[i].second, y.params[i].second);
        if (c != 0) return c < 0;
    }
    return x.params.size() < y.params.size();
}

std::string status_name(CheckStatus s) {
    switch (s) {
        case CheckStatus::Pass: return "PASS";
        case CheckStatus::Fail: return "FAIL";
        default: return "SKIPPED";
    }
}

std::string level_name(VerifyLevel level) {
    return level == VerifyLevel::Desk ? "desk" : "smoke";
}

}  // namespace

Report make_report(VerifyLevel level, std::vector<CheckResult> checks) {
    std::stable_sort(checks.begin(), checks.end(), row_less);
    Report rep;
    rep.level = level;
    for (const CheckResult& r : checks) {
        if (r.status == CheckStatus::Pass) ++rep.pass;
        else if (r.status == CheckStatus::Fail) ++rep.fail;
        else ++rep.skipped;
    }
    // FNV-1a over the evaluated instances (ids and parameter bindings, not
    // outcomes), so the run id identifies the configuration.
    std::uint64_t h = 1469598103934665603ULL;
    auto feed = [&h](const std::string& s) {
        for (char ch : s) {
            h ^= static_cast<unsigned char>(ch);
            h *= 1099511628211ULL;
        }
        h ^= 0xff;
        h *= 1099511628211ULL;
    };
    feed(level_name(level));
    for (const CheckResult& r : checks) {
        feed(r.check_id);
        for (const auto& [name, value] : r.params) {
            feed(name);
            feed(value);
        }
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    rep.run_id = buf;
    rep.checks = std::move(checks);
    return rep;
}

Report run_all(VerifyLevel level, const VerifyOptions& opts) {
    return run_selected(registered_checks(), level, std::nullopt, std::nullopt,
                        opts);
}

Report run_selected(const std::vector<std::string>& check_ids,
                    VerifyLevel level, std::optional<int> n_max_override,
                    std::optional<int> k_max_override,
                    const VerifyOptions& opts) {
    std::vector<CheckResult> rows;
    for (const std::string& id : check_ids) {
        CheckPreset p = check_preset(id, level);
        if (n_max_override) {
            p.corpus.n_max = *n_max_override;
            p.corpus.n_min = std::min(p.corpus.n_min, p.corpus.n_max);
        }
        if (k_max_override) {
            p.k_max = *k_max_override;
            p.k_min = std::min(p.k_min, p.k_max);
        }
        std::vector<CheckResult> part =
            run_check(id, p.corpus, p.k_min, p.k_max, opts);
        rows.insert(rows.end(), std::make_move_iterator(part.begin()),
                    std::make_move_iterator(part.end()));
    }
    return make_report(level, std::move(rows));
}

namespace {

nlohmann::json kv_to_json(const KV& pairs) {
    nlohmann::json j = nlohmann::json::object();
    for (const auto& [name, value] : pairs) {
        if (integer_like(value))
            j[name] = std::stoll(value);
        else
            j[name] = value;
    }
    return j;
}

}  // namespace

std::string report_to_json(const Report& report) {
    nlohmann::json j;
    j["run_id"] = report.run_id;
    j["level"] = level_name(report.level);
    nlohmann::json rows = nlohmann::json::array();
    for (const CheckResult& r : report.checks) {
        nlohmann::json row;
        row["check_id"] = r.check_id;
        row["params"] = kv_to_json(r.params);
        row["status"] = status_name(r.status);
        row["elapsed_ms"] = r.elapsed_ms;
        if (r.counterexample) {
            nlohmann::json cx;
            cx["graph"] = r.counterexample->graph_edge_list;
            cx["computed"] = kv_to_json(r.counterexample->computed);
            cx["expected"] = kv_to_json(r.counterexample->expected);
            row["counterexample"] = cx;
        }
        rows.push_back(std::move(row));
    }
    j["checks"] = std::move(rows);
    j["summary"] = {{"pass", report.pass},
                    {"fail", report.fail},
                    {"skipped", report.skipped}};
    return j.dump(2) + "\n";
}

}  // namespace rdom

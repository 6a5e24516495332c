#ifndef RDOM_VERIFY_HPP
#define RDOM_VERIFY_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rdom/graph.hpp"

namespace rdom {

// ---------------------------------------------------------------------------
// Corpora
// ---------------------------------------------------------------------------

// Exhaustive enumeration of labeled connected graphs on n vertices (all
// 2^(n(n-1)/2) adjacency choices, connected ones kept; no isomorphism
// reduction). The callback receives each graph; enumeration order is the
// numeric order of the upper-triangle edge mask. 1 <= n <= 7.
void enumerate_connected_graphs(int n,
                                const std::function<void(const Graph&)>& fn);

// Same, without the connectivity filter (every labeled graph on n vertices).
void enumerate_labeled_graphs(int n,
                              const std::function<void(const Graph&)>& fn);

// Number of labeled connected graphs on n vertices, by enumeration.
long long count_connected_graphs(int n);

// Seeded random connected graph: sample each edge independently with
// probability p until the result is connected (up to 1000 attempts), then
// fall back to a random spanning tree plus p-sampled extra edges. Identical
// output for identical (n, p, seed).
Graph random_connected_graph(int n, double p, unsigned long long seed);

enum class CorpusKind { Exhaustive, Random, Family };

// Which graphs a check run quantifies over. EXHAUSTIVE uses all labeled
// connected graphs for n in [n_min, n_max] (n_max <= 7); RANDOM draws `count`
// graphs per (n, p) pair from the seeded generator; FAMILY sweeps the
// parameter ranges below. Checks read only the fields their corpus kind
// uses.
struct CorpusSpec {
    CorpusKind kind = CorpusKind::Exhaustive;
    int n_min = 1;
    int n_max = 6;
    int count = 5;  // random graphs per (n, p)
    std::vector<std::string> edge_probabilities = {"0.3", "0.6"};
    unsigned long long seed = 1;
    // Family sweep ranges (prescribed-triple and extremal checks).
    int beta_max = 3;
    int gamma_max = 3;
    int alpha_max = 6;
    int r_max = 3;
    int order_cap = 64;  // skip generated graphs larger than this
};

// ---------------------------------------------------------------------------
// Check results
// ---------------------------------------------------------------------------

enum class CheckStatus { Pass, Fail, Skipped };

// A failing check records the offending graph and both sides of the broken
// claim, so the violation can be reproduced from the report alone.
struct Counterexample {
    std::string graph_edge_list;
    std::vector<std::pair<std::string, std::string>> computed;
    std::vector<std::pair<std::string, std::string>> expected;
};

// One evaluated instance of one claim. `params` is an ordered list of
// (name, value) bindings identifying the instance (k, n, family parameters).
struct CheckResult {
    std::string check_id;
    std::vector<std::pair<std::string, std::string>> params;
    CheckStatus status = CheckStatus::Pass;
    std::optional<Counterexample> counterexample;
    long long elapsed_ms = 0;
};

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------
//
// Registered check ids (CLI spelling):
//   chk_sandwich         max{gamma_k, dim} <= gamma_rk <= min{gamma_k + dim, n-1}
//   chk_diam_collapse    k >= diam  implies  gamma_rk = dim          (n >= 2)
//   chk_path_formula     closed form for gamma_rk on paths
//   chk_cycle_formula    closed form for gamma_rk on cycles
//   chk_cycle_resolving  {0, 2k+1} resolves C_n iff n != 4k+2       (n >= 2k+2)
//   chk_radius_plus1     rad <= k or diam = k+1  implies  dim <= gamma_rk <= dim+1
//   chk_nk_upper         gamma_rk <= n - k*gamma_k  (n >= k+1, diam >= k);
//                        equality on the comb trees
//   chk_diam_upper       diameter-based upper bounds (three cases)
//   chk_lower_trio       (2k+1)*gamma_rk >= d+1, >= 2*rad, >= girth (if finite)
//   chk_lem22            gamma_rk = n-i  iff  dim = n-i   (non-paths, k >= 2,
//                        1 <= i <= k, n >= i+2)
//   chk_char1            gamma_rk = 1  iff  G is a path of order <= k+1
//   chk_char_n2          gamma_rk = n-2 characterization (k = 2 and k >= 3 lists)
//   chk_char_n1          gamma_rk = n-1  iff  G is complete (n >= 2)
//   chk_triples          realizable (dim, gamma_k, gamma_rk) triples: construct
//                        and certify; infeasible shape rejected; nonexistence
//                        scan over the exhaustive corpus
//   chk_maxorder         extremal graph order matches the closed form; its
//                        canonical r-set is optimal; corpus obeys the bound
//   chk_ng2              k = 2 sum/product bounds for G and its complement over
//                        all labeled graphs, with equality-case identification
//   chk_ngk              k >= 3 variant of chk_ng2
//   chk_ng_connected     both-G-and-complement-connected refinement, with the
//                        upper-equality catalog at k >= 3
//   chk_ld_dominates     gamma_rk <= ld_k
//
// A check whose preconditions exclude a corpus element emits a SKIPPED row
// rather than silently narrowing its quantifier.

// All registered check ids, sorted.
const std::vector<std::string>& registered_checks();
bool is_registered_check(const std::string& check_id);

enum class VerifyLevel { Smoke, Desk };

struct VerifyOptions {
    int threads = 1;
    int solver_cap = 64;
    // Test-only mutation seam: added to the distance k-resolving domination
    // values computed inside chk_sandwich, to exercise FAIL reporting.
    // Zero in normal operation.
    int fault_injection_delta = 0;
};

// Per-check default corpus and k-range at a given level. SMOKE keeps every
// check under a few seconds; DESK covers the full documented ranges.
struct CheckPreset {
    CorpusSpec corpus;
    int k_min = 1;
    int k_max = 3;
};
CheckPreset check_preset(const std::string& check_id, VerifyLevel level);

// Evaluate one claim over a corpus and k-range. Throws DomainError for an
// unregistered id. Row order is deterministic; `opts.threads` only
// parallelizes the underlying searches.
std::vector<CheckResult> run_check(const std::string& check_id,
                                   const CorpusSpec& corpus, int k_min,
                                   int k_max, const VerifyOptions& opts = {});

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

struct Report {
    std::string run_id;  // hash of level + evaluated instances; stable across
                         // reruns of the same configuration
    VerifyLevel level = VerifyLevel::Smoke;
    std::vector<CheckResult> checks;
    int pass = 0;
    int fail = 0;
    int skipped = 0;
};

// Sort rows (check_id, then params with numeric-aware comparison), compute
// run_id and the summary counts.
Report make_report(VerifyLevel level, std::vector<CheckResult> checks);

// Run every registered check at its level preset.
Report run_all(VerifyLevel level, const VerifyOptions& opts = {});

// Run a subset of checks at their level presets, with optional overrides
// applied to every preset (CLI --nmax / --kmax).
Report run_selected(const std::vector<std::string>& check_ids,
                    VerifyLevel level, std::optional<int> n_max_override,
                    std::optional<int> k_max_override,
                    const VerifyOptions& opts = {});

// Serialize as JSON:
//   { run_id, level, checks: [ { check_id, params, status,
//     counterexample?, elapsed_ms } ], summary: { pass, fail, skipped } }
// Status strings are "PASS" / "FAIL" / "SKIPPED"; params whose values are
// pure integers are emitted as JSON numbers.
std::string report_to_json(const Report& report);

}  // namespace rdom

#endif  // RDOM_VERIFY_HPP

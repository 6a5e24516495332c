#include "rdom/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rdom {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Append a path of `len` new vertices hanging off `attach`; labels continue
// from `next`. Returns the label of the far end (or `attach` for len = 0).
int add_leg(std::vector<std::pair<int, int>>& edges, int& next, int attach, int len) {
    int prev = attach;
    for (int i = 0; i < len; ++i) {
        edges.emplace_back(prev, next);
        prev = next++;
    }
    return prev;
}

void require(bool ok, const std::string& message) {
    if (!ok) throw DomainError(message);
}

void validate(const FamilyParams& p) {
    switch (p.family) {
        case Family::TGamma:
            require(p.k >= 1 && p.gamma >= 1, "comb tree requires k >= 1, gamma >= 1");
            break;
        case Family::T1:
            require(p.k >= 2 && p.m >= 0 && p.l >= 1, "t1 requires k >= 2, m >= 0, l >= 1");
            break;
        case Family::T2:
            require(p.k >= 2 && p.m >= 1 && p.l >= 1, "t2 requires k >= 2, m >= 1, l >= 1");
            break;
        case Family::T3:
            require(p.k >= 2 && p.m >= 1 && p.l >= 1, "t3 requires k >= 2, m >= 1, l >= 1");
            break;
        case Family::T4:
            require(p.k >= 2 && p.m >= 0 && p.l >= 0 && p.r >= 3 && (p.m || p.l),
                    "t4 requires k >= 2, m >= 0, l >= 0, r >= 3, (m,l) != (0,0)");
            break;
        case Family::T5:
            require(p.k >= 2 && p.m >= 0 && p.l >= 0 && p.r >= 2 && (p.m || p.l),
                    "t5 requires k >= 2, m >= 0, l >= 0, r >= 2, (m,l) != (0,0)");
            break;
        case Family::Spider:
            require(p.k >= 1 && p.legs >= 3, "spider requires k >= 1, legs >= 3");
            break;
        case Family::ExtremalGr:
            require(p.k >= 1 && p.r >= 2, "extremal_gr requires k >= 1, r >= 2");
            break;
        case Family::Path:
            require(p.n >= 1, "path requires n >= 1");
            break;
        case Family::Cycle:
            require(p.n >= 3, "cycle requires n >= 3");
            break;
        case Family::Complete:
            require(p.n >= 1, "complete requires n >= 1");
            break;
        case Family::CompleteBipartite:
            require(p.s >= 1 && p.t >= 1, "complete bipartite requires s, t >= 1");
            break;
        case Family::Star:
            require(p.n >= 1, "star requires n >= 1");
            break;
        case Family::Bull:
            break;
    }
}

// --- Tree gadget layouts -----------------------------------------------
//
// "Leg": hanging path of k vertices. "Branch": hanging path of k+1 vertices
// (one longer than a leg, so its tip escapes the k-ball of the attachment
// point). "Hub": a vertex carrying two legs.

Graph make_t_gamma(int k, int gamma) {
    std::vector<std::pair<int, int>> edges;
    int next = gamma;
    for (int i = 0; i + 1 < gamma; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < gamma; ++i) add_leg(edges, next, i, k);
    return Graph(next, edges);
}

Graph make_spider(int k, int legs) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int j = 0; j < legs; ++j) add_leg(edges, next, 0, k);
    return Graph(next, edges);
}

Graph make_t1(int k, int m, int l) {
    std::vector<std::pair<int, int>> edges;
    int next = l;  // hubs occupy 0..l-1
    for (int i = 0; i + 1 < l; ++i) edges.emplace_back(i, i + 1);
    for (int i = 0; i < l; ++i) {
        add_leg(edges, next, i, k);
        add_leg(edges, next, i, k);
    }
    for (int j = 0; j < m; ++j) add_leg(edges, next, l - 1, k + 1);
    return Graph(next, edges);
}

Graph make_t2(int k, int m, int l) {
    std::vector<std::pair<int, int>> edges;
    int next = 2;  // 0 = center, 1 = pendant
    edges.emplace_back(0, 1);
    for (int i = 0; i < l; ++i) add_leg(edges, next, 0, k);
    for (int j = 0; j < m; ++j) add_leg(edges, next, 0, k + 1);
    return Graph(next, edges);
}

Graph make_t3(int k, int m, int l) {
    std::vector<std::pair<int, int>> edges;
    int next = 2;  // 0 = center, 1 = pendant
    edges.emplace_back(0, 1);
    for (int j = 0; j < m; ++j) add_leg(edges, next, 0, k + 1);
    add_leg(edges, next, 0, k + l * (2 * k + 1));  // long spine
    return Graph(next, edges);
}

Graph make_t4(int k, int m, int l, int r) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;  // 0 = center
    for (int j = 0; j < r; ++j) add_leg(edges, next, 0, k);
    for (int j = 0; j < m; ++j) add_leg(edges, next, 0, k + 1);
    for (int i = 0; i < l; ++i) {
        int hub = add_leg(edges, next, 0, 1);
        add_leg(edges, next, hub, k);
        add_leg(edges, next, hub, k);
    }
    return Graph(next, edges);
}

Graph make_t5(int k, int m, int l, int r) {
    std::vector<std::pair<int, int>> edges;
    int next = 2;  // 0 = center, 1 = pendant
    edges.emplace_back(0, 1);
    for (int j = 0; j < m; ++j) add_leg(edges, next, 0, k + 1);
    for (int i = 0; i < l; ++i) {
        int hub = add_leg(edges, next, 0, 1);
        add_leg(edges, next, hub, k);
        add_leg(edges, next, hub, k);
    }
    // Tail ending in a forked hub with two legs; the fork sits at distance
    // (r-1)(2k+1) from the center.
    int tail_end = add_leg(edges, next, 0, (r - 1) * (2 * k + 1) - 1);
    int fork = add_leg(edges, next, tail_end, 1);
    add_leg(edges, next, fork, k);
    add_leg(edges, next, fork, k);
    return Graph(next, edges);
}

long long checked_pow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) {
        if (out > 9000000000000000000LL / base)
            throw DomainError("predicted order overflows");
        out *= base;
    }
    return out;
}

}  // namespace

std::string family_name(Family f) {
    switch (f) {
        case Family::TGamma: return "t_gamma";
        case Family::T1: return "t1";
        case Family::T2: return "t2";
        case Family::T3: return "t3";
        case Family::T4: return "t4";
        case Family::T5: return "t5";
        case Family::Spider: return "spider";
        case Family::ExtremalGr: return "extremal_gr";
        case Family::Path: return "path";
        case Family::Cycle: return "cycle";
        case Family::Complete: return "complete";
        case Family::CompleteBipartite: return "complete_bipartite";
        case Family::Star: return "star";
        case Family::Bull: return "bull";
    }
    throw DomainError("unknown family");
}

std::optional<Family> family_from_name(const std::string& name) {
    std::string s = name;
    std::replace(s.begin(), s.end(), '-', '_');
    static const std::pair<const char*, Family> table[] = {
        {"t_gamma", Family::TGamma}, {"t1", Family::T1},
        {"t2", Family::T2},          {"t3", Family::T3},
        {"t4", Family::T4},          {"t5", Family::T5},
        {"spider", Family::Spider},  {"extremal_gr", Family::ExtremalGr},
        {"path", Family::Path},      {"cycle", Family::Cycle},
        {"complete", Family::Complete},
        {"complete_bipartite", Family::CompleteBipartite},
        {"star", Family::Star},      {"bull", Family::Bull},
    };
    for (const auto& [key, fam] : table)
        if (s == key) return fam;
    return std::nullopt;
}

Graph generate_family(const FamilyParams& p) {
    validate(p);
    switch (p.family) {
        case Family::TGamma: return make_t_gamma(p.k, p.gamma);
        case Family::T1: return make_t1(p.k, p.m, p.l);
        case Family::T2: return make_t2(p.k, p.m, p.l);
        case Family::T3: return make_t3(p.k, p.m, p.l);
        case Family::T4: return make_t4(p.k, p.m, p.l, p.r);
        case Family::T5: return make_t5(p.k, p.m, p.l, p.r);
        case Family::Spider: return make_spider(p.k, p.legs);
        case Family::ExtremalGr: return extremal_gr(p.k, p.r, p.order_cap);
        case Family::Path: return path_graph(p.n);
        case Family::Cycle: return cycle_graph(p.n);
        case Family::Complete: return complete_graph(p.n);
        case Family::CompleteBipartite: return complete_bipartite_graph(p.s, p.t);
        case Family::Star: return star_graph(p.n);
        case Family::Bull: return bull_graph();
    }
    throw DomainError("unknown family");
}

FamilyClaims family_claims(const FamilyParams& p) {
    validate(p);
    FamilyClaims c;
    switch (p.family) {
        case Family::TGamma:
            // n = gamma(k+1), so the n - k*gamma bound collapses to gamma.
            c.gamma_k = p.gamma;
            c.gamma_rk = p.gamma;
            break;
        case Family::T1:
            c.dim = p.m + p.l;
            c.gamma_k = p.m + p.l;
            c.gamma_rk = p.m + 2 * p.l;
            break;
        case Family::T2:
            c.dim = p.m + p.l;
            c.gamma_k = p.m + 1;
            c.gamma_rk = p.m + p.l;
            break;
        case Family::T3:
            c.dim = p.m + 1;
            c.gamma_k = p.m + p.l + 1;
            c.gamma_rk = p.m + p.l + 1;
            break;
        case Family::T4:
            c.dim = p.m + p.l + p.r - 1;
            c.gamma_k = p.m + p.l + 1;
            c.gamma_rk = p.m + 2 * p.l + p.r;
            break;
        case Family::T5:
            c.dim = p.m + p.l + 1;
            c.gamma_k = p.m + p.l + p.r;
            c.gamma_rk = p.m + 2 * p.l + p.r + 1;
            break;
        case Family::Spider:
            c.dim = p.legs - 1;
            c.gamma_k = 1;
            c.gamma_rk = p.legs;
            break;
        case Family::ExtremalGr:
            c.gamma_rk = p.r;
            break;
        case Family::Path:
            require(p.k >= 1, "claims require k >= 1");
            c.dim = p.n == 1 ? 0 : 1;
            c.gamma_k = ceil_div(p.n, 2 * p.k + 1);
            c.gamma_rk = p.n == 1 ? 1 : predicted_gamma_rk_path(p.n, p.k);
            break;
        case Family::Cycle:
            require(p.k >= 1, "claims require k >= 1");
            c.dim = 2;
            c.gamma_k = ceil_div(p.n, 2 * p.k + 1);
            c.gamma_rk = predicted_gamma_rk_cycle(p.n, p.k);
            break;
        case Family::Complete:
            c.dim = p.n - 1 < 0 ? 0 : p.n - 1;
            c.gamma_k = 1;
            c.gamma_rk = p.n == 1 ? 1 : p.n - 1;
            break;
        case Family::CompleteBipartite: {
            require(p.k >= 1, "claims require k >= 1");
            int n = p.s + p.t;
            if (p.s == 1 && p.t == 1) {
                c.dim = 1;
                c.gamma_k = 1;
                c.gamma_rk = 1;
            } else if (p.s == 1 || p.t == 1) {
                c.dim = n - 2;
                c.gamma_k = 1;
                c.gamma_rk = p.k == 1 ? n - 1 : n - 2;
            } else {
                c.dim = n - 2;
                c.gamma_k = p.k == 1 ? 2 : 1;
                c.gamma_rk = n - 2;
            }
            break;
        }
        case Family::Star: {
            require(p.k >= 1, "claims require k >= 1");
            if (p.n == 1) {
                c.dim = 0;
                c.gamma_k = 1;
                c.gamma_rk = 1;
            } else if (p.n == 2) {
                c.dim = 1;
                c.gamma_k = 1;
                c.gamma_rk = 1;
            } else {
                c.dim = p.n - 2;
                c.gamma_k = 1;
                c.gamma_rk = p.k == 1 ? p.n - 1 : p.n - 2;
            }
            break;
        }
        case Family::Bull:
            require(p.k >= 1, "claims require k >= 1");
            c.dim = 2;
            c.gamma_k = p.k == 1 ? 2 : 1;
            c.gamma_rk = 2;
            break;
    }
    return c;
}

int predicted_gamma_rk_path(int n, int k) {
    if (k < 1 || n < 2) throw DomainError("path prediction requires k >= 1, n >= 2");
    if (k >= n - 1) return 1;
    if (k >= n / 2) return 2;
    return ceil_div(n, 2 * k + 1);
}

int predicted_gamma_rk_cycle(int n, int k) {
    if (k < 1 || n < 3) throw DomainError("cycle prediction requires k >= 1, n >= 3");
    if (4 * k + 1 >= n) return 2;
    if (n == 4 * k + 2) return 3;
    return ceil_div(n, 2 * k + 1);
}

int tree_metric_dimension_formula(const Graph& g) {
    const int n = g.order();
    if (n < 1 || g.size() != n - 1 || !is_connected(g))
        throw DomainError("formula requires a tree");
    int max_deg = 0;
    for (int v = 0; v < n; ++v) max_deg = std::max(max_deg, g.degree(v));
    if (max_deg < 3) throw DomainError("formula does not apply to paths");

    int leaves = 0;
    std::vector<char> exterior(n, 0);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != 1) continue;
        ++leaves;
        // Walk inward until the first vertex of degree >= 3; that major
        // vertex owns this leaf.
        int prev = v, cur = g.neighbors(v)[0];
        while (g.degree(cur) == 2) {
            int nxt = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                  : g.neighbors(cur)[0];
            prev = cur;
            cur = nxt;
        }
        exterior[cur] = 1;
    }
    int ex = 0;
    for (int v = 0; v < n; ++v) ex += exterior[v];
    return leaves - ex;
}

long long predicted_max_order(int k, int r) {
    if (k < 1 || r < 1) throw DomainError("prediction requires k >= 1, r >= 1");
    long long sum = 0;
    for (int p = 1; p <= k; ++p) {
        long long term = checked_pow(2 * p + 1, r - 1);
        if (sum > 9000000000000000000LL - term) throw DomainError("predicted order overflows");
        sum += term;
    }
    if (sum > (9000000000000000000LL - r) / r) throw DomainError("predicted order overflows");
    return r + r * sum;
}

std::vector<std::vector<int>> extremal_gr_vectors(int k, int r, int order_cap) {
    if (k < 1 || r < 2) throw DomainError("extremal construction requires k >= 1, r >= 2");
    long long order = predicted_max_order(k, r);
    if (order > order_cap)
        throw SizeCapError("extremal graph order " + std::to_string(order) +
                           " exceeds cap " + std::to_string(order_cap));

    // Vertices are integer vectors of length r. The r anchor vectors have 0
    // in one coordinate and 2k+1 elsewhere; the i-th box holds the vectors
    // with 1 <= q_i <= k and 2k-q_i+1 <= q_j <= 2k+q_i+1 for j != i.
    std::vector<std::vector<int>> anchors, box;
    for (int i = 0; i < r; ++i) {
        std::vector<int> q(r, 2 * k + 1);
        q[i] = 0;
        anchors.push_back(std::move(q));
    }
    for (int i = 0; i < r; ++i) {
        for (int qi = 1; qi <= k; ++qi) {
            std::vector<int> q(r, 2 * k - qi + 1);
            q[i] = qi;
            // Odometer over the free coordinates j != i, each ranging over
            // [2k-qi+1, 2k+qi+1].
            const int lo = 2 * k - qi + 1, hi = 2 * k + qi + 1;
            while (true) {
                box.push_back(q);
                int j = r - 1;
                while (j >= 0 && (j == i || q[j] == hi)) --j;
                if (j < 0) break;
                ++q[j];
                for (int j2 = j + 1; j2 < r; ++j2)
                    if (j2 != i) q[j2] = lo;
            }
        }
    }
    // Anchor i carries label i (the construction loop already emits them in
    // coordinate order); box vectors follow in lexicographic order.
    std::sort(box.begin(), box.end());

    std::vector<std::vector<int>> verts = std::move(anchors);
    verts.insert(verts.end(), box.begin(), box.end());
    if (static_cast<long long>(verts.size()) != order)
        throw DomainError("extremal construction size mismatch");
    return verts;
}

Graph extremal_gr(int k, int r, int order_cap) {
    const std::vector<std::vector<int>> verts = extremal_gr_vectors(k, r, order_cap);
    const int n = static_cast<int>(verts.size());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            bool adj = true;
            for (int j = 0; j < r && adj; ++j)
                adj = std::abs(verts[a][j] - verts[b][j]) <= 1;
            if (adj) edges.emplace_back(a, b);
        }
    }
    return Graph(n, edges);
}

bool triple_is_realizable(const TripleTarget& t) {
    if (t.k < 2 || t.beta < 1 || t.gamma < 1 || t.alpha < 1)
        throw DomainError("triple targets require k >= 2 and positive values");
    if (t.alpha < std::max(t.beta, t.gamma) || t.alpha > t.beta + t.gamma) return false;
    if (t.beta == 1 && t.gamma >= 2 && t.alpha == t.gamma + 1) return false;
    return true;
}

Graph realize_triple(const TripleTarget& t) {
    if (!triple_is_realizable(t))
        throw InfeasibleTripleError(
            "no graph has (dim, gamma_k, gamma_rk) = (" + std::to_string(t.beta) +
            ", " + std::to_string(t.gamma) + ", " + std::to_string(t.alpha) +
            ") for k = " + std::to_string(t.k));

    const int k = t.k, beta = t.beta, gamma = t.gamma, alpha = t.alpha;

    FamilyParams p;
    p.k = k;
    if (beta == 1) {
        // Paths cover every realizable triple with dim = 1.
        p.family = Family::Path;
        if (gamma == 1 && alpha == 1)
            p.n = 2;
        else if (gamma == 1 && alpha == 2)
            p.n = k + 2;
        else
            p.n = gamma * (2 * k + 1);  // alpha == gamma >= 2
    } else if (gamma == 1 && alpha == beta) {
        p.family = Family::Star;
        p.n = beta + 2;
    } else if (gamma == 1 && alpha == beta + 1) {
        p.family = Family::Spider;
        p.legs = beta + 1;
    } else if (beta == gamma && gamma == alpha) {
        p.family = Family::T2;
        p.m = gamma - 1;
        p.l = 1;
    } else if (beta == gamma && gamma < alpha) {
        p.family = Family::T1;
        p.m = 2 * beta - alpha;
        p.l = alpha - beta;
    } else if (gamma < beta && beta == alpha) {
        p.family = Family::T2;
        p.m = gamma - 1;
        p.l = beta - gamma + 1;
    } else if (beta < gamma && gamma == alpha) {
        p.family = Family::T3;
        p.m = beta - 1;
        p.l = gamma - beta;
    } else if (gamma < beta && beta < alpha) {
        p.family = Family::T4;
        p.m = gamma - alpha + beta;
        p.l = alpha - beta - 1;
        p.r = beta - gamma + 2;
    } else {  // beta < gamma < alpha
        p.family = Family::T5;
        p.m = beta - alpha + gamma;
        p.l = alpha - gamma - 1;
        p.r = gamma - beta + 1;
    }

    // The inversion must reproduce the target through the claim formulas.
    FamilyClaims c = family_claims(p);
    if (c.dim != beta || c.gamma_k != gamma || c.gamma_rk != alpha)
        throw DomainError("triple dispatch produced inconsistent parameters");
    return generate_family(p);
}

}  // namespace rdom

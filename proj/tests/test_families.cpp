#include <doctest.h>

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "rdom/errors.hpp"
#include "rdom/families.hpp"
#include "rdom/graph.hpp"
#include "rdom/solvers.hpp"

using rdom::Family;
using rdom::FamilyParams;
using rdom::Graph;

namespace {

// Re-derive every claim a construction makes with the exact search.
void certify(const FamilyParams& params) {
    const Graph g = rdom::generate_family(params);
    const auto claims = rdom::family_claims(params);
    rdom::SearchOptions opts;
    opts.cap = std::max(64, g.order());
    INFO("family=" << rdom::family_name(params.family) << " k=" << params.k
                   << " order=" << g.order());
    if (claims.dim) {
        auto r = rdom::minimum_set(g, rdom::SetPredicate::Resolving,
                                   std::nullopt, opts);
        CHECK(r.value == *claims.dim);
    }
    if (claims.gamma_k) {
        auto r = rdom::minimum_set(g, rdom::SetPredicate::KDominating,
                                   params.k, opts);
        CHECK(r.value == *claims.gamma_k);
    }
    if (claims.gamma_rk) {
        auto r = rdom::minimum_set(g, rdom::SetPredicate::KResolvingDominating,
                                   params.k, opts);
        CHECK(r.value == *claims.gamma_rk);
    }
}

FamilyParams make(Family f, int k) {
    FamilyParams p;
    p.family = f;
    p.k = k;
    return p;
}

}  // namespace

TEST_CASE("closed forms for paths") {
    CHECK(rdom::predicted_gamma_rk_path(2, 1) == 1);
    CHECK(rdom::predicted_gamma_rk_path(5, 4) == 1);
    CHECK(rdom::predicted_gamma_rk_path(7, 3) == 2);
    CHECK(rdom::predicted_gamma_rk_path(7, 5) == 2);
    CHECK(rdom::predicted_gamma_rk_path(10, 1) == 4);
    CHECK(rdom::predicted_gamma_rk_path(12, 2) == 3);
    CHECK_THROWS_AS(rdom::predicted_gamma_rk_path(1, 1), rdom::DomainError);
    CHECK_THROWS_AS(rdom::predicted_gamma_rk_path(5, 0), rdom::DomainError);
}

TEST_CASE("closed forms for cycles") {
    CHECK(rdom::predicted_gamma_rk_cycle(3, 1) == 2);
    CHECK(rdom::predicted_gamma_rk_cycle(10, 2) == 3);
    CHECK(rdom::predicted_gamma_rk_cycle(13, 3) == 2);
    CHECK(rdom::predicted_gamma_rk_cycle(14, 3) == 3);
    CHECK(rdom::predicted_gamma_rk_cycle(15, 3) == 3);
    CHECK(rdom::predicted_gamma_rk_cycle(21, 1) == 7);
    CHECK_THROWS_AS(rdom::predicted_gamma_rk_cycle(2, 1), rdom::DomainError);
    CHECK_THROWS_AS(rdom::predicted_gamma_rk_cycle(5, 0), rdom::DomainError);
}

TEST_CASE("tree metric dimension from leaves and exterior major vertices") {
    CHECK(rdom::tree_metric_dimension_formula(rdom::star_graph(6)) == 4);

    auto spider = make(Family::Spider, 2);
    spider.legs = 3;
    CHECK(rdom::tree_metric_dimension_formula(rdom::generate_family(spider)) ==
          2);

    auto comb = make(Family::TGamma, 1);
    comb.gamma = 3;
    auto t = rdom::generate_family(comb);
    CHECK(rdom::tree_metric_dimension_formula(t) ==
          rdom::minimum_set(t, rdom::SetPredicate::Resolving).value);

    CHECK_THROWS_AS(rdom::tree_metric_dimension_formula(rdom::path_graph(6)),
                    rdom::DomainError);
    CHECK_THROWS_AS(rdom::tree_metric_dimension_formula(rdom::cycle_graph(5)),
                    rdom::DomainError);
    CHECK_THROWS_AS(rdom::tree_metric_dimension_formula(
                        rdom::disjoint_union(rdom::star_graph(4), Graph(1))),
                    rdom::DomainError);
}

TEST_CASE("family names round-trip and tolerate hyphens") {
    using rdom::family_from_name;
    using rdom::family_name;
    const std::vector<Family> all = {
        Family::TGamma, Family::T1,     Family::T2,
        Family::T3,     Family::T4,     Family::T5,
        Family::Spider, Family::ExtremalGr, Family::Path,
        Family::Cycle,  Family::Complete,   Family::CompleteBipartite,
        Family::Star,   Family::Bull};
    for (Family f : all) {
        auto back = family_from_name(family_name(f));
        REQUIRE(back.has_value());
        CHECK(*back == f);
    }
    CHECK(family_from_name("extremal-gr") == Family::ExtremalGr);
    CHECK(family_from_name("t-gamma") == Family::TGamma);
    CHECK(family_from_name("complete-bipartite") == Family::CompleteBipartite);
    CHECK_FALSE(family_from_name("widget").has_value());
    CHECK_FALSE(family_from_name("").has_value());
}

TEST_CASE("parameter validation") {
    auto bad = [](FamilyParams p) {
        CHECK_THROWS_AS(rdom::generate_family(p), rdom::DomainError);
    };
    {
        auto p = make(Family::T1, 2);
        p.l = 0;
        bad(p);
        p.l = 1;
        p.k = 1;
        bad(p);
    }
    {
        auto p = make(Family::T4, 2);
        p.r = 3;  // m = l = 0
        bad(p);
        p.m = 1;
        p.r = 2;
        bad(p);
    }
    {
        auto p = make(Family::Spider, 1);
        p.legs = 2;
        bad(p);
    }
    {
        auto p = make(Family::Cycle, 1);
        p.n = 2;
        bad(p);
    }
    {
        auto p = make(Family::CompleteBipartite, 1);
        p.s = 0;
        p.t = 3;
        bad(p);
    }
    {
        auto p = make(Family::ExtremalGr, 1);
        p.r = 1;
        bad(p);
    }
    {
        auto p = make(Family::TGamma, 2);
        p.gamma = 0;
        bad(p);
    }
}

TEST_CASE("constructions attain their claimed invariant values") {
    std::vector<FamilyParams> battery;

    for (auto [n, k] : {std::pair{9, 2}, {5, 1}, {2, 3}}) {
        auto p = make(Family::Path, k);
        p.n = n;
        battery.push_back(p);
    }
    for (auto [n, k] : {std::pair{11, 2}, {10, 2}, {7, 1}}) {
        auto p = make(Family::Cycle, k);
        p.n = n;
        battery.push_back(p);
    }
    {
        auto p = make(Family::Complete, 2);
        p.n = 6;
        battery.push_back(p);
        auto q = make(Family::Star, 1);
        q.n = 6;
        battery.push_back(q);
        auto cb = make(Family::CompleteBipartite, 2);
        cb.s = 2;
        cb.t = 3;
        battery.push_back(cb);
        battery.push_back(make(Family::Bull, 1));
        battery.push_back(make(Family::Bull, 2));
    }
    for (auto [k, m, l] : {std::tuple{2, 0, 1}, {2, 1, 1}, {2, 2, 2}, {3, 1, 2}}) {
        auto p = make(Family::T1, k);
        p.m = m;
        p.l = l;
        battery.push_back(p);
    }
    for (auto [k, m, l] : {std::tuple{2, 1, 1}, {2, 2, 1}, {3, 1, 1}}) {
        auto p = make(Family::T2, k);
        p.m = m;
        p.l = l;
        battery.push_back(p);
        auto q = make(Family::T3, k);
        q.m = m;
        q.l = l;
        battery.push_back(q);
    }
    for (auto [k, m, l, r] :
         {std::tuple{2, 1, 1, 3}, {2, 0, 1, 3}, {2, 1, 0, 3}, {3, 1, 1, 3}}) {
        auto p = make(Family::T4, k);
        p.m = m;
        p.l = l;
        p.r = r;
        battery.push_back(p);
    }
    for (auto [k, m, l, r] :
         {std::tuple{2, 1, 1, 2}, {2, 0, 1, 2}, {2, 1, 0, 2}, {3, 1, 1, 2}}) {
        auto p = make(Family::T5, k);
        p.m = m;
        p.l = l;
        p.r = r;
        battery.push_back(p);
    }
    for (auto [k, gamma] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 2}, {1, 4}}) {
        auto p = make(Family::TGamma, k);
        p.gamma = gamma;
        battery.push_back(p);
    }
    for (auto [k, legs] : {std::pair{1, 3}, {2, 3}, {2, 4}, {3, 3}}) {
        auto p = make(Family::Spider, k);
        p.legs = legs;
        battery.push_back(p);
    }
    for (auto [k, r] : {std::pair{1, 2}, {2, 2}, {1, 3}}) {
        auto p = make(Family::ExtremalGr, k);
        p.r = r;
        battery.push_back(p);
    }

    for (const auto& p : battery) certify(p);
}

TEST_CASE("largest graphs of a given search size") {
    CHECK(rdom::predicted_max_order(1, 2) == 8);
    CHECK(rdom::predicted_max_order(2, 2) == 18);
    CHECK(rdom::predicted_max_order(1, 3) == 30);
    CHECK(rdom::predicted_max_order(3, 2) == 32);
    CHECK(rdom::predicted_max_order(2, 3) == 105);
    CHECK_THROWS_AS(rdom::predicted_max_order(1, 45), rdom::DomainError);
    CHECK_THROWS_AS(rdom::predicted_max_order(0, 2), rdom::DomainError);
    CHECK_THROWS_AS(rdom::predicted_max_order(1, 0), rdom::DomainError);
    // A single-vertex search set forces a path of order at most k + 1.
    CHECK(rdom::predicted_max_order(1, 1) == 2);
    CHECK(rdom::predicted_max_order(4, 1) == 5);

    auto g = rdom::extremal_gr(1, 2);
    CHECK(g.order() == 8);
    CHECK(rdom::is_connected(g));

    const int k = 1, r = 2;
    auto vecs = rdom::extremal_gr_vectors(k, r);
    REQUIRE(static_cast<int>(vecs.size()) == g.order());
    std::set<std::vector<int>> unique(vecs.begin(), vecs.end());
    CHECK(unique.size() == vecs.size());
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j)
            CHECK(vecs[i][j] == (i == j ? 0 : 2 * k + 1));
    }
    auto dm = rdom::all_pairs_distances(g);
    for (int v = 0; v < g.order(); ++v)
        for (int i = 0; i < r; ++i)
            if (v >= r) CHECK(dm.at(v, i) == vecs[v][i]);

    CHECK_THROWS_AS(rdom::extremal_gr(2, 3, 64), rdom::SizeCapError);
    CHECK(rdom::extremal_gr(2, 3, 105).order() == 105);
}

TEST_CASE("prescribed invariant triples") {
    using rdom::TripleTarget;

    CHECK(rdom::triple_is_realizable({2, 1, 1, 1}));
    CHECK(rdom::triple_is_realizable({2, 1, 2, 2}));
    CHECK(rdom::triple_is_realizable({2, 3, 3, 6}));
    CHECK_FALSE(rdom::triple_is_realizable({2, 1, 2, 3}));
    CHECK_FALSE(rdom::triple_is_realizable({2, 1, 3, 4}));
    CHECK_FALSE(rdom::triple_is_realizable({2, 1, 2, 4}));  // above beta+gamma
    CHECK_FALSE(rdom::triple_is_realizable({2, 3, 1, 2}));  // below the max

    CHECK_THROWS_AS(rdom::realize_triple({1, 2, 2, 2}), rdom::DomainError);
    CHECK_THROWS_AS(rdom::realize_triple({2, 1, 2, 3}),
                    rdom::InfeasibleTripleError);

    for (int beta = 1; beta <= 2; ++beta) {
        for (int gamma = 1; gamma <= 2; ++gamma) {
            for (int alpha = 1; alpha <= 4; ++alpha) {
                TripleTarget t{2, beta, gamma, alpha};
                if (!rdom::triple_is_realizable(t)) {
                    CHECK_THROWS_AS(rdom::realize_triple(t),
                                    rdom::InfeasibleTripleError);
                    continue;
                }
                auto g = rdom::realize_triple(t);
                INFO("beta=" << beta << " gamma=" << gamma
                             << " alpha=" << alpha << " order=" << g.order());
                CHECK(rdom::is_connected(g));
                CHECK(g.size() == g.order() - 1);  // always a tree
                rdom::SearchOptions opts;
                opts.cap = std::max(64, g.order());
                CHECK(rdom::minimum_set(g, rdom::SetPredicate::Resolving,
                                        std::nullopt, opts)
                          .value == beta);
                CHECK(rdom::minimum_set(g, rdom::SetPredicate::KDominating,
                                        t.k, opts)
                          .value == gamma);
                CHECK(rdom::minimum_set(
                          g, rdom::SetPredicate::KResolvingDominating, t.k,
                          opts)
                          .value == alpha);
            }
        }
    }
}

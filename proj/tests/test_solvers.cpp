#include <doctest.h>

#include <algorithm>
#include <optional>
#include <vector>

#include "naive_oracle.hpp"
#include "rdom/errors.hpp"
#include "rdom/graph.hpp"
#include "rdom/solvers.hpp"
#include "rdom/verify.hpp"

using rdom::Graph;
using rdom::Invariant;
using rdom::minimum_set;
using rdom::SearchOptions;
using rdom::SetPredicate;
using rdom::VertexSet;

TEST_CASE("predicates evaluate their definitions") {
    auto p4 = rdom::path_graph(4);
    auto dm = rdom::all_pairs_distances(p4);

    CHECK(rdom::is_distance_k_dominating(p4, dm, {1}, 2));
    CHECK_FALSE(rdom::is_distance_k_dominating(p4, dm, {0}, 2));
    CHECK_FALSE(rdom::is_distance_k_dominating(p4, dm, {}, 1));

    CHECK(rdom::is_resolving(p4, dm, {0}));
    CHECK_FALSE(rdom::is_resolving(p4, dm, {1}));  // 0 and 2 tie at distance 1

    CHECK(rdom::is_k_locating_dominating(p4, dm, {0, 2}, 1));
    CHECK_FALSE(rdom::is_k_locating_dominating(p4, dm, {0, 1}, 1));

    auto k1 = rdom::complete_graph(1);
    auto dm1 = rdom::all_pairs_distances(k1);
    CHECK(rdom::is_resolving(k1, dm1, {}));  // no pair left to separate
}

TEST_CASE("fixed values and lexicographically least witnesses") {
    auto grk = [](const Graph& g, int k) {
        return minimum_set(g, SetPredicate::KResolvingDominating, k);
    };

    auto r = grk(rdom::path_graph(10), 2);
    CHECK(r.value == 2);
    CHECK(r.witness == VertexSet{2, 7});

    CHECK(grk(rdom::cycle_graph(10), 2).value == 3);

    r = grk(rdom::complete_graph(5), 3);
    CHECK(r.value == 4);
    CHECK(r.witness == VertexSet{0, 1, 2, 3});

    r = minimum_set(rdom::complete_graph(4), SetPredicate::Resolving);
    CHECK(r.value == 3);
    CHECK(r.witness == VertexSet{0, 1, 2});
    CHECK_FALSE(r.k.has_value());

    r = minimum_set(rdom::path_graph(7), SetPredicate::KDominating, 1);
    CHECK(r.value == 3);
    CHECK(r.witness == VertexSet{0, 2, 5});

    r = minimum_set(rdom::path_graph(4), SetPredicate::KLocatingDominating, 1);
    CHECK(r.value == 2);
    CHECK(r.witness == VertexSet{0, 2});

    // Deep stars: every leaf but one is needed to resolve, one hub dominates.
    auto star = rdom::star_graph(5);
    CHECK(grk(star, 2).value == 3);
    CHECK(minimum_set(star, SetPredicate::KDominating, 2).value == 1);
    CHECK(minimum_set(star, SetPredicate::KLocatingDominating, 2).value == 4);

    // A k beyond the diameter leaves only the resolving constraint.
    auto p2 = rdom::path_graph(2);
    for (auto pred :
         {SetPredicate::KDominating, SetPredicate::KResolvingDominating,
          SetPredicate::KLocatingDominating}) {
        CHECK(minimum_set(p2, pred, 5).value == 1);
    }
}

TEST_CASE("the four invariants share one distance matrix and one order") {
    auto rs = rdom::all_invariants(rdom::cycle_graph(9), 1);
    REQUIRE(rs.size() == 4);
    CHECK(rs[0].name == Invariant::Dim);
    CHECK(rs[1].name == Invariant::GammaK);
    CHECK(rs[2].name == Invariant::GammaRk);
    CHECK(rs[3].name == Invariant::LdK);
    CHECK_FALSE(rs[0].k.has_value());
    CHECK(rs[1].k == 1);
    CHECK(rs[2].k == 1);
    CHECK(rs[3].k == 1);
    CHECK(rs[0].value == 2);
    CHECK(rs[1].value == 3);
    CHECK(rs[2].value == 3);
    CHECK(rs[3].value >= rs[2].value);

    CHECK(rdom::invariant_name(Invariant::Dim) == "dim");
    CHECK(rdom::invariant_name(Invariant::GammaK) == "gamma_k");
    CHECK(rdom::invariant_name(Invariant::GammaRk) == "gamma_rk");
    CHECK(rdom::invariant_name(Invariant::LdK) == "ld_k");

    CHECK(rdom::predicate_for(Invariant::GammaRk) ==
          SetPredicate::KResolvingDominating);
    CHECK(rdom::invariant_for(SetPredicate::KLocatingDominating) ==
          Invariant::LdK);
}

TEST_CASE("searched values match plain subset enumeration on small graphs") {
    for (int n = 1; n <= 4; ++n) {
        rdom::enumerate_connected_graphs(n, [&](const Graph& g) {
            for (int k = 1; k <= 2; ++k) {
                auto all = rdom::all_invariants(g, k);
                CHECK(all[0].value == naive::minimum(g, naive::Target::Dim, k));
                CHECK(all[1].value ==
                      naive::minimum(g, naive::Target::GammaK, k));
                CHECK(all[2].value ==
                      naive::minimum(g, naive::Target::GammaRk, k));
                CHECK(all[3].value == naive::minimum(g, naive::Target::LdK, k));
            }
        });
    }
}

TEST_CASE("witnesses satisfy their predicates and grow monotonically in k") {
    std::vector<Graph> sample = {rdom::path_graph(9), rdom::cycle_graph(9),
                                 rdom::bull_graph(),
                                 rdom::complete_bipartite_graph(2, 3),
                                 rdom::random_connected_graph(8, 0.3, 7)};
    for (const auto& g : sample) {
        auto dm = rdom::all_pairs_distances(g);
        int previous = g.order() + 1;
        for (int k = 1; k <= 3; ++k) {
            auto r = minimum_set(g, SetPredicate::KResolvingDominating, k);
            CHECK(rdom::is_distance_k_dominating(g, dm, r.witness, k));
            CHECK(rdom::is_resolving(g, dm, r.witness));
            CHECK(static_cast<int>(r.witness.size()) == r.value);
            // Larger k relaxes the domination side, never the reverse.
            CHECK(r.value <= previous);
            previous = r.value;

            auto ld = minimum_set(g, SetPredicate::KLocatingDominating, k);
            CHECK(rdom::is_k_locating_dominating(g, dm, ld.witness, k));
            CHECK(r.value <= ld.value);
        }
    }
}

TEST_CASE("feasibility is closed under adding vertices") {
    auto g = rdom::cycle_graph(7);
    auto dm = rdom::all_pairs_distances(g);
    auto r = minimum_set(g, SetPredicate::KResolvingDominating, 1);
    for (int v = 0; v < g.order(); ++v) {
        VertexSet bigger = r.witness;
        if (std::find(bigger.begin(), bigger.end(), v) != bigger.end())
            continue;
        bigger.insert(std::lower_bound(bigger.begin(), bigger.end(), v), v);
        CHECK(rdom::is_distance_k_dominating(g, dm, bigger, 1));
        CHECK(rdom::is_resolving(g, dm, bigger));
    }
}

TEST_CASE("forced vertices are kept and counted") {
    SearchOptions opts;
    opts.forced = {3};
    auto r = minimum_set(rdom::path_graph(7), SetPredicate::KDominating, 1, opts);
    CHECK(r.value == 3);
    CHECK(r.witness == VertexSet{0, 3, 5});

    opts.forced = {0, 1, 2, 3, 4, 5, 6};
    r = minimum_set(rdom::path_graph(7), SetPredicate::KDominating, 1, opts);
    CHECK(r.value == 7);
}

TEST_CASE("thread count never changes the answer") {
    std::vector<Graph> sample = {rdom::path_graph(12),
                                 rdom::random_connected_graph(10, 0.4, 3)};
    for (const auto& g : sample) {
        for (auto pred : {SetPredicate::KResolvingDominating,
                          SetPredicate::KLocatingDominating}) {
            auto lone = minimum_set(g, pred, 2);
            SearchOptions opts;
            opts.threads = 4;
            auto pooled = minimum_set(g, pred, 2, opts);
            CHECK(lone.value == pooled.value);
            CHECK(lone.witness == pooled.witness);
        }
    }
}

TEST_CASE("size cap is enforced and can be raised") {
    SearchOptions opts;
    opts.cap = 4;
    CHECK_THROWS_AS(
        minimum_set(rdom::path_graph(5), SetPredicate::KDominating, 1, opts),
        rdom::SizeCapError);

    opts.cap = 0;
    CHECK_THROWS_AS(
        minimum_set(rdom::path_graph(2), SetPredicate::KDominating, 1, opts),
        rdom::DomainError);
    opts.cap = 257;
    CHECK_THROWS_AS(
        minimum_set(rdom::path_graph(2), SetPredicate::KDominating, 1, opts),
        rdom::DomainError);

    // Above 64 vertices the set machinery switches to multiple words.
    opts.cap = 70;
    auto r = minimum_set(rdom::complete_graph(70),
                         SetPredicate::KResolvingDominating, 1, opts);
    CHECK(r.value == 69);
}

TEST_CASE("domain validation") {
    auto p3 = rdom::path_graph(3);
    CHECK_THROWS_AS(minimum_set(Graph(0), SetPredicate::KDominating, 1),
                    rdom::DomainError);
    CHECK_THROWS_AS(minimum_set(p3, SetPredicate::KDominating, 0),
                    rdom::DomainError);
    CHECK_THROWS_AS(minimum_set(p3, SetPredicate::KDominating, std::nullopt),
                    rdom::DomainError);
    CHECK_THROWS_AS(minimum_set(p3, SetPredicate::Resolving, 1),
                    rdom::DomainError);
    SearchOptions bad;
    bad.threads = 0;
    CHECK_THROWS_AS(minimum_set(p3, SetPredicate::KDominating, 1, bad),
                    rdom::DomainError);
    SearchOptions out_of_range;
    out_of_range.forced = {5};
    CHECK_THROWS_AS(
        minimum_set(p3, SetPredicate::KDominating, 1, out_of_range),
        rdom::DomainError);
}

TEST_CASE("disconnected graphs need explicit permission") {
    auto two = rdom::disjoint_union(Graph(1), rdom::path_graph(2));
    CHECK_THROWS_AS(minimum_set(two, SetPredicate::KResolvingDominating, 1),
                    rdom::ConnectivityError);

    SearchOptions opts;
    opts.allow_disconnected = true;
    auto r = minimum_set(two, SetPredicate::KResolvingDominating, 1, opts);
    CHECK(r.value == 2);
    CHECK(r.witness == VertexSet{0, 1});

    // With no edges at all, only the full vertex set works.
    CHECK(minimum_set(Graph(3), SetPredicate::KResolvingDominating, 1, opts)
              .value == 3);
}

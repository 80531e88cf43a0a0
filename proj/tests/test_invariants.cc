#include "helpers.hh"
#include "oracles.hh"

#include <hog/enumerate.hh>
#include <hog/error.hh>
#include <hog/invariants.hh>
#include <hog/seed.hh>

#include <doctest.h>

using namespace hog;
using namespace std::chrono_literals;

TEST_SUITE("invariants")
{
    TEST_CASE("registry is closed and ordered")
    {
        auto reg = invariant_registry();
        REQUIRE(reg.size() == 17);
        for (std::size_t i = 0; i < reg.size(); ++i)
            CHECK(static_cast<std::size_t>(reg[i].id) == i);
        CHECK(find_invariant("chi") == InvariantId::chi);
        CHECK(find_invariant("mu") == InvariantId::mu);
        CHECK_FALSE(find_invariant("sigma").has_value());
        CHECK(invariant_info(InvariantId::chi).cost == CostClass::exp);
        CHECK(invariant_info(InvariantId::mu).cost == CostClass::poly);
        CHECK(invariant_info(InvariantId::regular).boolean_valued);
        CHECK_THROWS_AS(compute(complete_graph(2), "sigma"), Error);
    }

    TEST_CASE("known values on named graphs")
    {
        auto h = heawood_graph();
        CHECK(compute(h, InvariantId::girth) == InvariantValue::of(6));
        CHECK(compute(h, InvariantId::mu) == InvariantValue::of(7));
        CHECK(compute(h, InvariantId::chi) == InvariantValue::of(2));
        CHECK(compute(h, InvariantId::diameter) == InvariantValue::of(3));
        CHECK(compute(h, InvariantId::avgdeg) == InvariantValue::of(3));
        auto p = petersen_graph();
        CHECK(compute(p, InvariantId::chi) == InvariantValue::of(3));
        CHECK(compute(p, InvariantId::alpha) == InvariantValue::of(4));
        CHECK(compute(p, InvariantId::girth) == InvariantValue::of(5));
        CHECK(compute(p, InvariantId::mu) == InvariantValue::of(5));
        CHECK(compute(path_graph(3), InvariantId::avgdeg) == InvariantValue::of(Rational(4, 3)));
        CHECK(compute(path_graph(3), InvariantId::girth).is_undefined());
        CHECK(compute(disjoint_union(complete_graph(2), complete_graph(2)), InvariantId::diameter).is_undefined());
        CHECK(compute(mycielskian(mycielskian(complete_graph(2))), InvariantId::chi) == InvariantValue::of(4));
    }

    TEST_CASE("empty graph conventions")
    {
        Graph g;
        CHECK(compute(g, InvariantId::n) == InvariantValue::of(0));
        CHECK(compute(g, InvariantId::components) == InvariantValue::of(0));
        CHECK(compute(g, InvariantId::chi) == InvariantValue::of(0));
        CHECK(compute(g, InvariantId::mu) == InvariantValue::of(0));
        CHECK(compute(g, InvariantId::bipartite) == InvariantValue::of(true));
        CHECK(compute(g, InvariantId::mindeg).is_undefined());
        CHECK(compute(g, InvariantId::connected).is_undefined());
        CHECK(compute(g, InvariantId::diameter).is_undefined());
        for (const auto & info : invariant_registry())
            CHECK(compute(g, info.id) == oracle::value(g, info.id));
    }

    TEST_CASE("value text forms")
    {
        CHECK(InvariantValue::of(Rational(4, 3)).to_string() == "4/3");
        CHECK(InvariantValue::of(true).to_string() == "true");
        CHECK(InvariantValue::undefined().to_string() == "undefined");
        CHECK(InvariantValue::pending().to_string() == "pending");
        CHECK(InvariantValue::unknown().to_string() == "unknown");
        CHECK(InvariantValue{}.status() == ValueStatus::pending);
        CHECK(InvariantValue::undefined().computed());
    }

    TEST_CASE("budgets")
    {
        CHECK(parse_budget("60s") == Budget{60s});
        CHECK(parse_budget("250ms") == Budget{250ms});
        CHECK(parse_budget("1us") == Budget{1us});
        CHECK(parse_budget("500ns") == Budget{500ns});
        CHECK(parse_budget("2m") == Budget{2min});
        CHECK(parse_budget("1h") == Budget{1h});
        CHECK(parse_budget("3") == Budget{3s});
        CHECK_FALSE(parse_budget("fast").has_value());

        // Chromatic number 7 on 95 vertices is far out of reach of a microsecond.
        auto hard = mycielskian(mycielskian(mycielskian(mycielskian(cycle_graph(5)))));
        auto start = std::chrono::steady_clock::now();
        CHECK(compute(hard, InvariantId::chi, 1us).status() == ValueStatus::unknown);
        CHECK(compute(hard, InvariantId::chi, 50ms).status() == ValueStatus::unknown);
        CHECK(std::chrono::steady_clock::now() - start < 1s);
        // Polynomial invariants ignore the budget.
        CHECK(compute(hard, InvariantId::mu, 1ns).computed());
    }

    TEST_CASE("all 7-vertex classes match the brute-force oracles")
    {
        for (int n = 0; n <= 7; ++n)
            for (const auto & g : enumerate_graph_classes(n))
                for (const auto & info : invariant_registry()) {
                    auto got = compute(g, info.id);
                    auto want = oracle::value(g, info.id);
                    if (got != want)
                        FAIL_CHECK(info.short_name << " on n=" << n << ": " << got.to_string() << " vs "
                                                   << want.to_string());
                }
    }

    TEST_CASE("random graphs on 8 to 12 vertices match the oracles")
    {
        std::mt19937_64 rng{2024};
        for (int i = 0; i < 120; ++i) {
            int n = 8 + static_cast<int>(rng() % 5);
            auto g = testing::random_graph(rng, n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
            auto a = oracle::masks(g);
            CHECK(chromatic_number(g, 60s) == InvariantValue::of(oracle::chromatic_number(a)));
            CHECK(clique_number(g, 60s) == InvariantValue::of(oracle::clique_number(a)));
            CHECK(independence_number(g, 60s) == InvariantValue::of(oracle::independence_number(a)));
            CHECK(matching_number(g, 60s) == InvariantValue::of(oracle::matching_number(a)));
            CHECK(compute(g, InvariantId::girth) == oracle::value(g, InvariantId::girth));
        }
    }
}

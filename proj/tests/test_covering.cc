#include "oracles.hh"

#include <hog/covering.hh>
#include <hog/error.hh>

#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

using namespace hog;

namespace
{
    // Keys for ids 1, 2, 3 ordered K1 < K2 < K3 as strings: "@" < "A_" < "Bw".
    auto small_keys(RecordId id) -> std::optional<CanonicalKey>
    {
        static const std::map<RecordId, std::string> keys{{1, "@"}, {2, "A_"}, {3, "Bw"}};
        auto it = keys.find(id);
        if (it == keys.end())
            return std::nullopt;
        return CanonicalKey{it->second};
    }

    auto as_set(const Cover & c) -> std::set<RecordId>
    {
        return {c.representatives.begin(), c.representatives.end()};
    }
}

TEST_SUITE("covering")
{
    TEST_CASE("pinned examples")
    {
        CHECK(as_set(greedy_representatives({{"A", {1}}, {"B", {2}}}, small_keys)) == std::set<RecordId>{1, 2});
        CHECK(as_set(greedy_representatives({{"A", {1, 2}}, {"B", {2, 3}}}, small_keys)) == std::set<RecordId>{2});

        std::vector<Conglomerate> triangle{{"A", {1, 2}}, {"B", {1, 3}}, {"C", {2, 3}}};
        auto cover = greedy_representatives(triangle, small_keys);
        // All three graphs tie at 2; the smallest key wins, then 2 beats 3 for C.
        CHECK(cover.representatives == std::vector<RecordId>{1, 2});
        CHECK(cover.assignment.at("A") == 1);
        CHECK(cover.assignment.at("B") == 1);
        CHECK(cover.assignment.at("C") == 2);
        CHECK(oracle::set_cover_optimum(triangle) == 2);
    }

    TEST_CASE("verify_cover")
    {
        std::vector<Conglomerate> cs{{"A", {1, 2}}, {"B", {3}}};
        CHECK(verify_cover(cs, {2, 3}).covered);
        auto missing = verify_cover(cs, {2});
        CHECK_FALSE(missing.covered);
        CHECK(missing.first_uncovered == "B");
        CHECK(verify_cover({}, {}).covered);
        CHECK(greedy_representatives({}, small_keys).representatives.empty());
    }

    TEST_CASE("invalid input")
    {
        CHECK_THROWS_AS(greedy_representatives({{"A", {}}}, small_keys), Error);
        CHECK_THROWS_AS(greedy_representatives({{"A", {1}}, {"A", {2}}}, small_keys), Error);
        CHECK_THROWS_AS(greedy_representatives({{"A", {9}}}, small_keys), Error);
    }

    TEST_CASE("conglomerate files")
    {
        auto specs = parse_conglomerate_file("# header\n\nchi=3, n=5 : Bw A_\nlonely: @\n");
        REQUIRE(specs.size() == 2);
        CHECK(specs[0].label == "chi=3, n=5");
        CHECK(specs[0].keys == std::vector<std::string>{"Bw", "A_"});
        CHECK(specs[1].label == "lonely");
        CHECK_THROWS_AS(parse_conglomerate_file("no colon here\n"), Error);
        CHECK_THROWS_AS(parse_conglomerate_file("label :\n"), Error);
    }

    TEST_CASE("random instances: feasible, order independent, within H(k) of optimum")
    {
        std::mt19937_64 rng{77};
        auto key_of = [](RecordId id) -> std::optional<CanonicalKey> {
            if (id < 1 || id > 15)
                return std::nullopt;
            return CanonicalKey{std::string(1, static_cast<char>('A' + (id * 7) % 15))};
        };
        for (int trial = 0; trial < 200; ++trial) {
            int graphs = 1 + static_cast<int>(rng() % 15);
            int count = static_cast<int>(rng() % 13);
            std::vector<Conglomerate> cs;
            for (int c = 0; c < count; ++c) {
                Conglomerate g{"c" + std::to_string(c), {}};
                for (int id = 1; id <= graphs; ++id)
                    if (rng() % 4 == 0)
                        g.members.push_back(id);
                if (g.members.empty())
                    g.members.push_back(1 + static_cast<RecordId>(rng() % graphs));
                cs.push_back(std::move(g));
            }
            auto cover = greedy_representatives(cs, key_of);
            CHECK(verify_cover(cs, cover.representatives).covered);
            for (const auto & c : cs) {
                auto rep = cover.assignment.at(c.label);
                CHECK(std::find(c.members.begin(), c.members.end(), rep) != c.members.end());
            }

            std::map<RecordId, int> membership;
            for (const auto & c : cs)
                for (auto id : c.members)
                    ++membership[id];
            int k = 0;
            for (auto [id, m] : membership)
                k = std::max(k, m);
            auto optimum = oracle::set_cover_optimum(cs);
            CHECK(static_cast<double>(cover.representatives.size()) <= oracle::harmonic(k) * static_cast<double>(optimum) + 1e-9);

            auto shuffled = cs;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            for (auto & c : shuffled)
                std::shuffle(c.members.begin(), c.members.end(), rng);
            CHECK(greedy_representatives(shuffled, key_of).representatives == cover.representatives);
        }
    }
}

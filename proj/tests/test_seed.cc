#include <hog/canonical.hh>
#include <hog/invariants.hh>
#include <hog/seed.hh>

#include <doctest.h>

#include <set>

using namespace hog;

TEST_SUITE("seed")
{
    TEST_CASE("catalogue graphs have their textbook parameters")
    {
        std::map<std::string, Graph> by_slug;
        for (const auto & e : seed_catalog())
            by_slug.emplace(e.slug, e.graph);
        auto check = [&](const std::string & slug, int n, std::size_t m, int girth) {
            CAPTURE(slug);
            REQUIRE(by_slug.contains(slug));
            const auto & g = by_slug.at(slug);
            CHECK(g.order() == n);
            CHECK(g.size() == m);
            if (girth > 0)
                CHECK(compute(g, InvariantId::girth) == InvariantValue::of(girth));
        };
        check("petersen", 10, 15, 5);
        check("heawood", 14, 21, 6);
        check("cube", 8, 12, 4);
        check("dodecahedron", 20, 30, 5);
        check("icosahedron", 12, 30, 3);
        check("pappus", 18, 27, 6);
        check("tutte-coxeter", 30, 45, 8);
        check("mcgee", 24, 36, 7);
        check("clebsch", 16, 40, 4);
        check("groetzsch", 11, 20, 4);
        check("frucht", 12, 18, 3);
        CHECK(compute(by_slug.at("groetzsch"), InvariantId::chi) == InvariantValue::of(4));
        CHECK(compute(by_slug.at("clebsch"), InvariantId::triangle_free) == InvariantValue::of(true));
    }

    TEST_CASE("slugs are unique; only the Kneser copy is a repeat")
    {
        std::set<std::string> slugs;
        std::map<CanonicalKey, std::vector<std::string>> classes;
        for (const auto & e : seed_catalog()) {
            CHECK(slugs.insert(e.slug).second);
            classes[canonical_key(e.graph)].push_back(e.slug);
        }
        for (const auto & [key, members] : classes)
            if (members.size() > 1)
                CHECK(members == std::vector<std::string>{"petersen", "kneser-5-2"});
    }
}

TEST_SUITE("seed")
{
    TEST_CASE("the shipped bundle matches the built-in catalogue")
    {
        auto shipped = read_seed_bundle(HOG_SEED_BUNDLE_DIR);
        auto builtin = seed_catalog();
        REQUIRE(shipped.size() == builtin.size());
        for (std::size_t i = 0; i < builtin.size(); ++i) {
            CHECK(shipped[i].slug == builtin[i].slug);
            CHECK(shipped[i].name == builtin[i].name);
            CHECK(shipped[i].provenance == builtin[i].provenance);
            CHECK(shipped[i].comment == builtin[i].comment);
            CHECK(shipped[i].graph == builtin[i].graph);
        }
    }
}

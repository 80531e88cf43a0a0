#include <hog/codecs.hh>
#include <hog/error.hh>
#include <hog/seed.hh>

#include <array>
#include <bit>
#include <fstream>
#include <sstream>

namespace hog
{
    auto generalized_petersen_graph(int n, int k) -> Graph
    {
        std::vector<Edge> edges;
        for (int i = 0; i < n; ++i) {
            edges.emplace_back(i, (i + 1) % n);
            edges.emplace_back(i, n + i);
            edges.emplace_back(n + i, n + (i + k) % n);
        }
        return Graph::from_edges(2 * n, edges);
    }

    auto petersen_graph() -> Graph { return generalized_petersen_graph(5, 2); }

    auto kneser_petersen_graph() -> Graph
    {
        std::vector<std::pair<int, int>> subsets;
        for (int a = 1; a <= 5; ++a)
            for (int b = a + 1; b <= 5; ++b)
                subsets.emplace_back(a, b);
        return Graph::from_predicate(10, [&](int u, int v) {
            auto [a, b] = subsets[u];
            auto [c, d] = subsets[v];
            return a != c && a != d && b != c && b != d;
        });
    }

    auto heawood_graph() -> Graph
    {
        constexpr std::array jumps{5, -5};
        return lcf_graph(jumps, 7);
    }

    auto line_graph(const Graph & g) -> Graph
    {
        auto edges = g.edges();
        return Graph::from_predicate(static_cast<int>(edges.size()), [&](int a, int b) {
            auto [p, q] = edges[a];
            auto [r, s] = edges[b];
            return p == r || p == s || q == r || q == s;
        });
    }

    auto mycielskian(const Graph & g) -> Graph
    {
        int n = g.order();
        std::vector<Edge> edges;
        for (auto [u, v] : g.edges()) {
            edges.emplace_back(u, v);
            edges.emplace_back(u, n + v);
            edges.emplace_back(v, n + u);
        }
        for (int i = 0; i < n; ++i)
            edges.emplace_back(n + i, 2 * n);
        return Graph::from_edges(2 * n + 1, edges);
    }

    namespace
    {
        auto lcf(std::initializer_list<int> jumps, int repeats) -> Graph
        {
            std::vector<int> j{jumps};
            return lcf_graph(j, repeats);
        }

        auto icosahedron() -> Graph
        {
            std::vector<Edge> edges;
            for (int k = 0; k < 5; ++k) {
                int upper = 1 + k, lower = 6 + k;
                edges.emplace_back(0, upper);
                edges.emplace_back(11, lower);
                edges.emplace_back(upper, 1 + (k + 1) % 5);
                edges.emplace_back(lower, 6 + (k + 1) % 5);
                edges.emplace_back(upper, lower);
                edges.emplace_back(upper, 6 + (k + 1) % 5);
            }
            return Graph::from_edges(12, edges);
        }

        auto moser_spindle() -> Graph
        {
            std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6}, {3, 6}};
            return Graph::from_edges(7, edges);
        }

        auto clebsch() -> Graph
        {
            return Graph::from_predicate(16, [](int u, int v) {
                int x = u ^ v;
                return std::popcount(static_cast<unsigned>(x)) == 1 || x == 15;
            });
        }

        auto wagner() -> Graph
        {
            std::vector<Edge> edges;
            for (int i = 0; i < 8; ++i) {
                edges.emplace_back(i, (i + 1) % 8);
                if (i < 4)
                    edges.emplace_back(i, i + 4);
            }
            return Graph::from_edges(8, edges);
        }

        auto split_tsv(const std::string & line) -> std::vector<std::string>
        {
            std::vector<std::string> fields;
            std::size_t start = 0;
            while (true) {
                auto tab = line.find('\t', start);
                fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
                if (tab == std::string::npos)
                    return fields;
                start = tab + 1;
            }
        }
    }

    auto seed_catalog() -> std::vector<SeedEntry>
    {
        std::vector<SeedEntry> c;
        auto add = [&](std::string slug, std::string name, Graph g, std::string provenance, std::string comment = {}) {
            c.push_back(SeedEntry{std::move(slug), std::move(name), std::move(g), std::move(provenance), std::move(comment)});
        };

        add("petersen", "Petersen graph", petersen_graph(),
            "Generalized Petersen graph GP(5,2); smallest snark; (3,5)-cage.");
        add("kneser-5-2", "Kneser graph K(5,2)", kneser_petersen_graph(),
            "Kneser relabelling of the Petersen graph: 2-subsets of {1..5}, adjacent when disjoint.");
        add("heawood", "Heawood graph", heawood_graph(),
            "(3,6)-cage; incidence graph of the Fano plane; LCF [5,-5]^7.");

        for (int n = 1; n <= 6; ++n)
            add("complete-" + std::to_string(n), "complete graph K" + std::to_string(n), complete_graph(n),
                "Complete graph on " + std::to_string(n) + (n == 1 ? " vertex." : " vertices."));
        for (int n = 4; n <= 10; ++n)
            add("cycle-" + std::to_string(n), "cycle C" + std::to_string(n), cycle_graph(n),
                "Cycle on " + std::to_string(n) + " vertices.");
        for (int n = 3; n <= 6; ++n)
            add("path-" + std::to_string(n), "path P" + std::to_string(n), path_graph(n),
                "Path on " + std::to_string(n) + " vertices.");
        for (int k = 3; k <= 5; ++k)
            add("star-" + std::to_string(k), "star K1," + std::to_string(k), star_graph(k),
                "Star with " + std::to_string(k) + " leaves.");

        add("k33", "utility graph K3,3", complete_bipartite_graph(3, 3), "Complete bipartite graph; (3,4)-cage.");
        add("cube", "cube graph Q3", generalized_petersen_graph(4, 1), "Skeleton of the cube; hypercube Q3.");
        add("octahedron", "octahedron graph", Graph::from_predicate(6, [](int u, int v) { return u / 2 != v / 2; }), "Skeleton of the octahedron; K2,2,2.");
        add("icosahedron", "icosahedron graph", icosahedron(), "Skeleton of the icosahedron.");
        add("dodecahedron", "dodecahedron graph", generalized_petersen_graph(10, 2),
            "Skeleton of the dodecahedron; GP(10,2).");
        add("moebius-kantor", "Moebius-Kantor graph", generalized_petersen_graph(8, 3),
            "GP(8,3); cubic symmetric graph of girth 6 on 16 vertices.");
        add("pappus", "Pappus graph", lcf({5, 7, -7, 7, -7, -5}, 3),
            "Cubic symmetric distance-regular graph on 18 vertices; girth 6.");
        add("desargues", "Desargues graph", generalized_petersen_graph(10, 3), "GP(10,3); girth 6 on 20 vertices.");
        add("nauru", "Nauru graph", generalized_petersen_graph(12, 5), "GP(12,5); girth 6 on 24 vertices.");
        add("franklin", "Franklin graph", lcf({5, -5}, 6), "Cubic graph on 12 vertices; LCF [5,-5]^6.");
        add("frucht", "Frucht graph", lcf({-5, -2, -4, 2, 5, -2, 2, 5, -2, -5, 4, 2}, 1),
            "Cubic graph with trivial automorphism group.");
        add("tutte-coxeter", "Tutte-Coxeter graph", lcf({-13, -9, 7, -7, 9, 13}, 5),
            "(3,8)-cage; Tutte 8-cage on 30 vertices.");
        add("mcgee", "McGee graph", lcf({12, 7, -7}, 8), "(3,7)-cage on 24 vertices.");
        add("wagner", "Wagner graph", wagner(), "Moebius ladder M8.");
        add("duerer", "Duerer graph", generalized_petersen_graph(6, 2), "GP(6,2).");
        add("groetzsch", "Groetzsch graph", mycielskian(cycle_graph(5)),
            "Mycielskian of C5; smallest triangle-free 4-chromatic graph.");
        add("clebsch", "Clebsch graph", clebsch(), "Folded 5-cube; 5-regular triangle-free on 16 vertices.");
        add("moser-spindle", "Moser spindle", moser_spindle(), "Unit-distance graph with chromatic number 4.");
        add("petersen-line", "line graph of the Petersen graph", line_graph(petersen_graph()),
            "Line graph of the Petersen graph; 4-regular on 15 vertices.");
        add("triangular-5", "triangular graph T(5)", line_graph(complete_graph(5)), "Line graph of K5.",
            "This is the complement of the Petersen graph.");
        return c;
    }

    void write_seed_bundle(const std::vector<SeedEntry> & entries, const std::filesystem::path & directory)
    {
        std::filesystem::create_directories(directory);
        std::ofstream manifest{directory / "manifest.tsv"};
        manifest << "# file\tname\tprovenance\tcomment\n";
        for (const auto & e : entries) {
            auto file = e.slug + ".txt";
            std::ofstream out{directory / file};
            out << "# " << e.name << "\n" << write_edge_text(e.graph);
            manifest << file << '\t' << e.name << '\t' << e.provenance << '\t' << e.comment << '\n';
        }
    }

    auto read_seed_bundle(const std::filesystem::path & directory) -> std::vector<SeedEntry>
    {
        std::ifstream manifest{directory / "manifest.tsv"};
        if (! manifest)
            throw format_error("no manifest.tsv in " + directory.string());
        std::vector<SeedEntry> entries;
        std::string line;
        std::size_t line_number = 0;
        while (std::getline(manifest, line)) {
            ++line_number;
            if (line.empty() || line.front() == '#')
                continue;
            auto fields = split_tsv(line);
            if (fields.size() < 2)
                throw format_error("manifest line " + std::to_string(line_number) + ": expected file and name",
                    std::nullopt, line_number);
            std::ifstream in{directory / fields[0]};
            if (! in)
                throw format_error("manifest line " + std::to_string(line_number) + ": cannot read " + fields[0],
                    std::nullopt, line_number);
            std::stringstream text;
            text << in.rdbuf();
            SeedEntry e;
            e.slug = std::filesystem::path{fields[0]}.stem().string();
            e.name = fields[1];
            e.graph = parse_edge_text(text.str());
            if (fields.size() > 2)
                e.provenance = fields[2];
            if (fields.size() > 3)
                e.comment = fields[3];
            entries.push_back(std::move(e));
        }
        return entries;
    }

    auto load_seed(Store & store, const std::vector<SeedEntry> & entries, UserId user) -> std::vector<SeedOutcome>
    {
        std::vector<SeedOutcome> outcomes;
        for (const auto & e : entries) {
            GraphMetadata meta;
            meta.name = e.name;
            if (! e.provenance.empty())
                meta.provenance = e.provenance;
            auto result = store.insert_graph(e.graph, meta, user);
            if (result.created && ! e.comment.empty())
                store.add_comment(result.id, e.comment, user);
            outcomes.push_back(SeedOutcome{e.slug, result});
        }
        return outcomes;
    }
}

#include "helpers.hh"

#include <hog/jobs.hh>
#include <hog/seed.hh>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unistd.h>

namespace testing
{
    TempDir::TempDir()
    {
        static std::atomic<int> counter{0};
        _path = std::filesystem::temp_directory_path()
            / ("hog-test-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        std::filesystem::remove_all(_path);
        std::filesystem::create_directories(_path);
    }

    TempDir::~TempDir()
    {
        std::error_code ec;
        std::filesystem::remove_all(_path, ec);
    }

    auto random_graph(std::mt19937_64 & rng, int n, double p) -> hog::Graph
    {
        std::bernoulli_distribution coin{p};
        std::vector<hog::Edge> edges;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u)
                if (coin(rng))
                    edges.emplace_back(u, v);
        return hog::Graph::from_edges(n, edges);
    }

    auto random_permutation(std::mt19937_64 & rng, int n) -> hog::Permutation
    {
        std::vector<hog::Vertex> image(n);
        std::iota(image.begin(), image.end(), 0);
        std::shuffle(image.begin(), image.end(), rng);
        return hog::Permutation{std::move(image)};
    }

    auto graph_from_bits(int n, std::uint64_t bits) -> hog::Graph
    {
        std::vector<hog::Edge> edges;
        int e = 0;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u, ++e)
                if (bits >> e & 1)
                    edges.emplace_back(u, v);
        return hog::Graph::from_edges(n, edges);
    }

    auto seeded_store() -> std::unique_ptr<hog::Store>
    {
        auto store = std::make_unique<hog::Store>();
        auto user = store->register_user("operator").user.id;
        hog::load_seed(*store, hog::seed_catalog(), user);
        hog::JobQueue jobs{*store};
        jobs.enqueue_pending();
        jobs.drain();
        return store;
    }

    auto read_text(const std::filesystem::path & p) -> std::string
    {
        std::ifstream in{p, std::ios::binary};
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }

    void write_text(const std::filesystem::path & p, const std::string & text)
    {
        std::ofstream out{p, std::ios::binary};
        out << text;
    }
}

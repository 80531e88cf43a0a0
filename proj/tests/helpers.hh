#ifndef HOG_TESTS_HELPERS_HH
#define HOG_TESTS_HELPERS_HH

#include <hog/graph.hh>
#include <hog/store.hh>

#include <filesystem>
#include <memory>
#include <random>
#include <string>

namespace testing
{
    /// A fresh directory removed again on destruction.
    class TempDir
    {
    public:
        TempDir();
        ~TempDir();
        TempDir(const TempDir &) = delete;
        TempDir & operator=(const TempDir &) = delete;

        auto path() const -> const std::filesystem::path & { return _path; }
        auto operator/(const std::string & name) const -> std::filesystem::path { return _path / name; }

    private:
        std::filesystem::path _path;
    };

    /// Erdos-Renyi graph G(n, p).
    auto random_graph(std::mt19937_64 & rng, int n, double p) -> hog::Graph;
    auto random_permutation(std::mt19937_64 & rng, int n) -> hog::Permutation;

    /// The graph on n vertices whose upper-triangle pairs (column-major) are set by `bits`.
    auto graph_from_bits(int n, std::uint64_t bits) -> hog::Graph;

    /// An in-memory store holding the seed catalogue with every value computed.
    auto seeded_store() -> std::unique_ptr<hog::Store>;

    auto read_text(const std::filesystem::path & p) -> std::string;
    void write_text(const std::filesystem::path & p, const std::string & text);
}

#endif

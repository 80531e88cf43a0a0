#ifndef HOG_SEED_HH
#define HOG_SEED_HH

#include <hog/store.hh>

#include <filesystem>
#include <string>
#include <vector>

namespace hog
{
    struct SeedEntry
    {
        std::string slug; ///< file stem in the bundle
        std::string name;
        Graph graph;
        std::string provenance;
        std::string comment; ///< added as a comment when the record is created; may be empty
    };

    /// The named classic graphs shipped with the database.
    auto seed_catalog() -> std::vector<SeedEntry>;

    /// Bundle layout: one edge-text file per graph plus manifest.tsv with the columns
    /// file, name, provenance, comment.
    void write_seed_bundle(const std::vector<SeedEntry> & entries, const std::filesystem::path & directory);
    auto read_seed_bundle(const std::filesystem::path & directory) -> std::vector<SeedEntry>;

    struct SeedOutcome
    {
        std::string slug;
        InsertResult result;
    };

    /// Idempotent: entries already present (up to isomorphism) are reported as duplicates.
    auto load_seed(Store & store, const std::vector<SeedEntry> & entries, UserId user) -> std::vector<SeedOutcome>;

    auto petersen_graph() -> Graph;
    /// The Petersen graph with vertices the 2-subsets of {1..5} in lexicographic order,
    /// adjacent when disjoint.
    auto kneser_petersen_graph() -> Graph;
    auto heawood_graph() -> Graph;
    auto generalized_petersen_graph(int n, int k) -> Graph;
    auto line_graph(const Graph & g) -> Graph;
    auto mycielskian(const Graph & g) -> Graph;
}

#endif

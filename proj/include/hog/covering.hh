#ifndef HOG_COVERING_HH
#define HOG_COVERING_HH

#include <hog/record.hh>

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hog
{
    /// Graphs sharing one extremal point for some combination of invariants.
    struct Conglomerate
    {
        std::string label;
        std::vector<RecordId> members;
    };

    struct Cover
    {
        /// In the order the greedy picked them.
        std::vector<RecordId> representatives;
        std::map<std::string, RecordId> assignment;
    };

    /// Canonical key of a stored graph, or nullopt when the id is unknown.
    using KeyLookup = std::function<std::optional<CanonicalKey>(RecordId)>;

    /// Repeatedly picks the graph in the most still-uncovered conglomerates, breaking
    /// ties by smallest canonical key and then smallest id. Each conglomerate is assigned
    /// the first pick that covers it. The result does not depend on the order of `cs`.
    /// Throws hog::Error (bad_format) for an empty conglomerate, a duplicate label or an
    /// unknown member.
    auto greedy_representatives(const std::vector<Conglomerate> & cs, const KeyLookup & key_of) -> Cover;

    struct CoverCheck
    {
        bool covered;
        std::optional<std::string> first_uncovered;
    };

    /// first_uncovered is the first label, in input order, with no representative.
    auto verify_cover(const std::vector<Conglomerate> & cs, const std::vector<RecordId> & representatives) -> CoverCheck;

    /// Lines of the form "label : key1 key2 ..."; blank lines and '#' comments skipped.
    /// Keys are graph6 strings.
    struct ConglomerateSpec
    {
        std::string label;
        std::vector<std::string> keys;
    };

    auto parse_conglomerate_file(std::string_view text) -> std::vector<ConglomerateSpec>;
}

#endif

#ifndef HOG_RECORD_HH
#define HOG_RECORD_HH

#include <hog/canonical.hh>
#include <hog/graph.hh>
#include <hog/invariants.hh>

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace hog
{
    using RecordId = std::int64_t;
    using UserId = std::int64_t;

    struct Point
    {
        double x = 0;
        double y = 0;

        friend auto operator==(const Point &, const Point &) -> bool = default;
    };

    using Embedding = std::vector<Point>;

    struct Comment
    {
        UserId author = 0;
        std::int64_t timestamp = 0; ///< seconds since the Unix epoch
        std::string text;

        friend auto operator==(const Comment &, const Comment &) -> bool = default;
    };

    struct GraphRecord
    {
        RecordId id = 0;
        CanonicalKey canonical_key;
        Graph graph; ///< canonically labelled
        std::optional<std::string> name;
        UserId owner = 0;
        std::vector<Comment> comments;
        std::set<InvariantId> interesting_for;
        InvariantMap invariant_values;
        Embedding embedding; ///< one point per vertex of `graph`
        std::optional<std::string> provenance;

        /// PENDING when the registry entry is absent from the map.
        auto value(InvariantId id) const -> InvariantValue;

        friend auto operator==(const GraphRecord &, const GraphRecord &) -> bool = default;
    };

    struct User
    {
        UserId id = 0;
        std::string login;
        std::string token_hash;

        friend auto operator==(const User &, const User &) -> bool = default;
    };
}

#endif

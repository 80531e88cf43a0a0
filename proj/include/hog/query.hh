#ifndef HOG_QUERY_HH
#define HOG_QUERY_HH

#include <hog/codecs.hh>
#include <hog/expr.hh>
#include <hog/json.hh>
#include <hog/store.hh>

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace hog
{
    enum class Polarity
    {
        satisfy,
        not_satisfy
    };

    /// Case-insensitive substring of the name, a comment, or the provenance.
    struct KeywordStep
    {
        std::string text;
    };

    /// Computed rational values within the bounds; undefined, pending and unknown are excluded.
    struct RangeStep
    {
        InvariantId invariant;
        std::optional<Rational> low;
        std::optional<Rational> high;
        bool inclusive = true;
    };

    struct InterestingForStep
    {
        InvariantId invariant;
    };

    /// Keeps graphs whose expression evaluates to exactly TRUE (satisfy) or FALSE (not_satisfy).
    struct ExprStep
    {
        Expression expression;
        Polarity polarity = Polarity::satisfy;
    };

    struct ExactGraphStep
    {
        CanonicalKey key;
    };

    struct BooleanStep
    {
        InvariantId invariant;
        bool value;
    };

    using RestrictionStep = std::variant<KeywordStep, RangeStep, InterestingForStep, ExprStep, ExactGraphStep, BooleanStep>;

    /// Validated constructors; throw hog::Error (bad_query).
    auto make_range(InvariantId invariant, std::optional<Rational> low, std::optional<Rational> high, bool inclusive = true)
        -> RangeStep;
    auto make_boolean(InvariantId invariant, bool value) -> BooleanStep;
    auto make_keyword(std::string text) -> KeywordStep;
    auto make_exact_graph(const Graph & g) -> ExactGraphStep;

    /// Sorting by id when invariant is empty; otherwise by computed value, non-computed
    /// last, then by id.
    struct SortKey
    {
        std::optional<InvariantId> invariant;
    };

    struct Query
    {
        std::vector<RestrictionStep> steps;
        std::size_t offset = 0;
        std::optional<std::size_t> limit;
        SortKey sort;
    };

    struct QueryPage
    {
        std::vector<GraphRecord> records;
        std::size_t total = 0;
    };

    auto matches(const GraphRecord & record, const RestrictionStep & step) -> bool;

    /// The members of `current` that satisfy `step`; ids missing from the store are dropped.
    auto apply_restriction(const Store & store, const std::set<RecordId> & current, const RestrictionStep & step)
        -> std::set<RecordId>;

    /// Result ids of the full (unpaged) query, in sort order.
    auto query_ids(const Store & store, const Query & q) -> std::vector<RecordId>;

    auto run_query(const Store & store, const Query & q) -> QueryPage;

    /// Full result in query order, encoded; multicode bytes are returned as raw chars.
    auto export_results(const Store & store, const Query & q, GraphFormat format) -> std::string;

    /// Serialises records in the order given.
    auto export_records(std::span<const GraphRecord> records, GraphFormat format) -> std::string;

    /// CLI step syntax: "keyword:<text>", "range:<inv>:<low>:<high>" (either bound may be
    /// empty), "bool:<inv>:true|false", "interesting:<inv>", "expr:<expression>",
    /// "notexpr:<expression>", "graph:<graph6>".
    auto parse_step_spec(std::string_view spec) -> RestrictionStep;

    auto step_from_json(const Json & j) -> RestrictionStep;
    auto to_json(const RestrictionStep & step) -> Json;

    /// {"steps": [...], "sort": "id", "page": {"offset": 0, "limit": 50}}
    auto query_from_json(const Json & j) -> Query;
    auto to_json(const Query & q) -> Json;
}

#endif

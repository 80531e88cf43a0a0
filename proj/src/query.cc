#include <hog/error.hh>
#include <hog/query.hh>

#include <algorithm>
#include <cctype>

namespace hog
{
    namespace
    {
        auto query_error(const std::string & message) -> Error { return Error{ErrorCode::bad_query, message}; }

        auto lower(std::string_view s) -> std::string
        {
            std::string out{s};
            for (auto & c : out)
                c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return out;
        }

        auto contains_folded(std::string_view haystack, const std::string & folded_needle) -> bool
        {
            return lower(haystack).find(folded_needle) != std::string::npos;
        }

        auto invariant_named(std::string_view name) -> InvariantId
        {
            auto id = find_invariant(name);
            if (! id)
                throw query_error("unknown invariant '" + std::string{name} + "'");
            return *id;
        }

        auto optional_bound(std::string_view text, std::string_view spec) -> std::optional<Rational>
        {
            if (text.empty())
                return std::nullopt;
            auto r = Rational::parse(text);
            if (! r)
                throw query_error("malformed bound '" + std::string{text} + "' in step '" + std::string{spec} + "'");
            return r;
        }

        auto split(std::string_view s, char sep) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> parts;
            std::size_t start = 0;
            while (true) {
                auto pos = s.find(sep, start);
                parts.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
                if (pos == std::string_view::npos)
                    return parts;
                start = pos + 1;
            }
        }

        // Orders computed values before everything else; ties and non-values by id.
        auto sort_records(std::vector<const GraphRecord *> & records, const SortKey & sort)
        {
            if (! sort.invariant)
                return;
            auto id = *sort.invariant;
            std::stable_sort(records.begin(), records.end(), [id](const GraphRecord * a, const GraphRecord * b) {
                auto va = a->value(id), vb = b->value(id);
                auto ra = va.rational(), rb = vb.rational();
                auto ba = va.boolean(), bb = vb.boolean();
                bool ha = ra || ba, hb = rb || bb;
                if (ha != hb)
                    return ha;
                if (ra && rb && *ra != *rb)
                    return *ra < *rb;
                if (ba && bb && *ba != *bb)
                    return ! *ba;
                return a->id < b->id;
            });
        }

        auto collect(const Store & store, const Query & q) -> std::vector<GraphRecord>
        {
            std::vector<GraphRecord> result;
            store.read([&](const std::map<RecordId, GraphRecord> & records) {
                std::vector<const GraphRecord *> kept;
                for (const auto & [id, record] : records)
                    if (std::all_of(q.steps.begin(), q.steps.end(),
                            [&](const RestrictionStep & s) { return matches(record, s); }))
                        kept.push_back(&record);
                sort_records(kept, q.sort);
                result.reserve(kept.size());
                for (auto r : kept)
                    result.push_back(*r);
            });
            return result;
        }
    }

    auto make_range(InvariantId invariant, std::optional<Rational> low, std::optional<Rational> high, bool inclusive)
        -> RangeStep
    {
        if (invariant_info(invariant).boolean_valued)
            throw query_error("range step on boolean invariant '" + std::string{short_name(invariant)} + "'");
        if (! low && ! high)
            throw query_error("range step needs at least one bound");
        if (low && high && *low > *high)
            throw query_error("range step has low bound " + low->to_string() + " above high bound " + high->to_string());
        return RangeStep{invariant, low, high, inclusive};
    }

    auto make_boolean(InvariantId invariant, bool value) -> BooleanStep
    {
        if (! invariant_info(invariant).boolean_valued)
            throw query_error("boolean step on numeric invariant '" + std::string{short_name(invariant)} + "'");
        return BooleanStep{invariant, value};
    }

    auto make_keyword(std::string text) -> KeywordStep
    {
        if (text.empty())
            throw query_error("keyword step needs a non-empty keyword");
        return KeywordStep{std::move(text)};
    }

    auto make_exact_graph(const Graph & g) -> ExactGraphStep { return ExactGraphStep{canonical_key(g)}; }

    auto matches(const GraphRecord & record, const RestrictionStep & step) -> bool
    {
        return std::visit(
            [&](const auto & s) -> bool {
                using S = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<S, KeywordStep>) {
                    auto needle = lower(s.text);
                    if (record.name && contains_folded(*record.name, needle))
                        return true;
                    if (record.provenance && contains_folded(*record.provenance, needle))
                        return true;
                    return std::any_of(record.comments.begin(), record.comments.end(),
                        [&](const Comment & c) { return contains_folded(c.text, needle); });
                }
                else if constexpr (std::is_same_v<S, RangeStep>) {
                    auto v = record.value(s.invariant).rational();
                    if (! v)
                        return false;
                    if (s.low && (s.inclusive ? *v < *s.low : *v <= *s.low))
                        return false;
                    if (s.high && (s.inclusive ? *v > *s.high : *v >= *s.high))
                        return false;
                    return true;
                }
                else if constexpr (std::is_same_v<S, InterestingForStep>)
                    return record.interesting_for.contains(s.invariant);
                else if constexpr (std::is_same_v<S, ExprStep>) {
                    auto t = evaluate(s.expression, record.invariant_values);
                    return t == (s.polarity == Polarity::satisfy ? TriBool::true_ : TriBool::false_);
                }
                else if constexpr (std::is_same_v<S, ExactGraphStep>)
                    return record.canonical_key == s.key;
                else {
                    auto b = record.value(s.invariant).boolean();
                    return b && *b == s.value;
                }
            },
            step);
    }

    auto apply_restriction(const Store & store, const std::set<RecordId> & current, const RestrictionStep & step)
        -> std::set<RecordId>
    {
        std::set<RecordId> result;
        store.read([&](const std::map<RecordId, GraphRecord> & records) {
            for (auto id : current) {
                auto it = records.find(id);
                if (it != records.end() && matches(it->second, step))
                    result.insert(id);
            }
        });
        return result;
    }

    auto query_ids(const Store & store, const Query & q) -> std::vector<RecordId>
    {
        std::vector<RecordId> ids;
        for (const auto & r : collect(store, q))
            ids.push_back(r.id);
        return ids;
    }

    auto run_query(const Store & store, const Query & q) -> QueryPage
    {
        auto all = collect(store, q);
        QueryPage page;
        page.total = all.size();
        auto begin = std::min(q.offset, all.size());
        auto end = q.limit ? std::min(all.size(), begin + *q.limit) : all.size();
        page.records.assign(std::make_move_iterator(all.begin() + begin), std::make_move_iterator(all.begin() + end));
        return page;
    }

    auto export_records(std::span<const GraphRecord> records, GraphFormat format) -> std::string
    {
        if (format == GraphFormat::readable) {
            std::string out;
            for (std::size_t i = 0; i < records.size(); ++i) {
                if (i > 0)
                    out += '\n';
                out += write_readable(records[i]);
            }
            return out;
        }

        std::vector<Graph> graphs;
        graphs.reserve(records.size());
        for (const auto & r : records)
            graphs.push_back(r.graph);
        switch (format) {
        case GraphFormat::graph6: return encode_graph6_stream(graphs);
        case GraphFormat::multicode: {
            auto bytes = encode_multicode(graphs);
            return std::string{bytes.begin(), bytes.end()};
        }
        case GraphFormat::edge_text: return encode_edge_text_stream(graphs);
        case GraphFormat::readable: break;
        }
        return {};
    }

    auto export_results(const Store & store, const Query & q, GraphFormat format) -> std::string
    {
        Query unpaged = q;
        unpaged.offset = 0;
        unpaged.limit.reset();
        auto records = collect(store, unpaged);
        return export_records(records, format);
    }

    auto parse_step_spec(std::string_view spec) -> RestrictionStep
    {
        auto colon = spec.find(':');
        if (colon == std::string_view::npos)
            throw query_error("step '" + std::string{spec} + "' has no kind prefix");
        auto kind = spec.substr(0, colon);
        auto rest = spec.substr(colon + 1);

        if (kind == "keyword")
            return make_keyword(std::string{rest});
        if (kind == "expr" || kind == "notexpr")
            return ExprStep{parse_expression(rest), kind == "expr" ? Polarity::satisfy : Polarity::not_satisfy};
        if (kind == "interesting")
            return InterestingForStep{invariant_named(rest)};
        if (kind == "graph")
            try {
                return make_exact_graph(decode_graph6(rest));
            }
            catch (const Error & e) {
                throw query_error(std::string{"graph step: "} + e.what());
            }
        if (kind == "range") {
            auto parts = split(rest, ':');
            if (parts.size() != 3)
                throw query_error("range step must be range:<invariant>:<low>:<high>");
            return make_range(invariant_named(parts[0]), optional_bound(parts[1], spec), optional_bound(parts[2], spec));
        }
        if (kind == "bool") {
            auto parts = split(rest, ':');
            if (parts.size() != 2 || (parts[1] != "true" && parts[1] != "false"))
                throw query_error("bool step must be bool:<invariant>:true|false");
            return make_boolean(invariant_named(parts[0]), parts[1] == "true");
        }
        throw query_error("unknown step kind '" + std::string{kind} + "'");
    }

    auto step_from_json(const Json & j) -> RestrictionStep
    {
        if (! j.is_object() || ! j.contains("type") || ! j["type"].is_string())
            throw query_error("each step needs a string \"type\"");
        auto type = j["type"].get<std::string>();
        auto string_field = [&](const char * field) -> std::string {
            if (! j.contains(field) || ! j[field].is_string())
                throw query_error(type + " step needs a string \"" + field + "\"");
            return j[field].get<std::string>();
        };
        auto bound = [&](const char * field) -> std::optional<Rational> {
            if (! j.contains(field) || j[field].is_null())
                return std::nullopt;
            try {
                return rational_from_json(j[field]);
            }
            catch (const Error & e) {
                throw query_error(std::string{"range bound: "} + e.what());
            }
        };

        if (type == "keyword")
            return make_keyword(string_field("text"));
        if (type == "range") {
            bool inclusive = ! j.contains("inclusive") || j["inclusive"].get<bool>();
            return make_range(invariant_named(string_field("invariant")), bound("low"), bound("high"), inclusive);
        }
        if (type == "interesting")
            return InterestingForStep{invariant_named(string_field("invariant"))};
        if (type == "expr") {
            auto polarity = Polarity::satisfy;
            if (j.contains("polarity")) {
                auto p = j["polarity"].get<std::string>();
                if (p == "not_satisfy")
                    polarity = Polarity::not_satisfy;
                else if (p != "satisfy")
                    throw query_error("polarity must be satisfy or not_satisfy");
            }
            return ExprStep{parse_expression(string_field("expression")), polarity};
        }
        if (type == "graph") {
            if (j.contains("key"))
                return ExactGraphStep{CanonicalKey{string_field("key")}};
            auto format = parse_graph_format(j.value("format", std::string{"graph6"}));
            if (! format || *format == GraphFormat::readable)
                throw query_error("graph step format must be graph6, multicode or edge-text");
            try {
                auto graphs = decode_graphs(*format, string_field("payload"));
                if (graphs.size() != 1)
                    throw query_error("graph step payload must hold exactly one graph");
                return make_exact_graph(graphs.front());
            }
            catch (const Error & e) {
                if (e.code() == ErrorCode::bad_query)
                    throw;
                throw query_error(std::string{"graph step: "} + e.what());
            }
        }
        if (type == "bool") {
            if (! j.contains("value") || ! j["value"].is_boolean())
                throw query_error("bool step needs a boolean \"value\"");
            return make_boolean(invariant_named(string_field("invariant")), j["value"].get<bool>());
        }
        throw query_error("unknown step type '" + type + "'");
    }

    auto to_json(const RestrictionStep & step) -> Json
    {
        return std::visit(
            [](const auto & s) -> Json {
                using S = std::decay_t<decltype(s)>;
                if constexpr (std::is_same_v<S, KeywordStep>)
                    return Json{{"type", "keyword"}, {"text", s.text}};
                else if constexpr (std::is_same_v<S, RangeStep>) {
                    Json j{{"type", "range"}, {"invariant", short_name(s.invariant)}, {"inclusive", s.inclusive}};
                    j["low"] = s.low ? to_json(*s.low) : Json(nullptr);
                    j["high"] = s.high ? to_json(*s.high) : Json(nullptr);
                    return j;
                }
                else if constexpr (std::is_same_v<S, InterestingForStep>)
                    return Json{{"type", "interesting"}, {"invariant", short_name(s.invariant)}};
                else if constexpr (std::is_same_v<S, ExprStep>)
                    return Json{{"type", "expr"}, {"expression", s.expression.to_string()},
                        {"polarity", s.polarity == Polarity::satisfy ? "satisfy" : "not_satisfy"}};
                else if constexpr (std::is_same_v<S, ExactGraphStep>)
                    return Json{{"type", "graph"}, {"key", s.key.text}};
                else
                    return Json{{"type", "bool"}, {"invariant", short_name(s.invariant)}, {"value", s.value}};
            },
            step);
    }

    auto query_from_json(const Json & j) -> Query
    {
        if (! j.is_object())
            throw query_error("search payload must be a JSON object");
        Query q;
        try {
            if (j.contains("steps")) {
                if (! j["steps"].is_array())
                    throw query_error("\"steps\" must be an array");
                for (const auto & s : j["steps"])
                    q.steps.push_back(step_from_json(s));
            }
            if (j.contains("sort") && ! j["sort"].is_null()) {
                auto key = j["sort"].get<std::string>();
                if (key != "id")
                    q.sort.invariant = invariant_named(key);
            }
            if (j.contains("page") && j["page"].is_object()) {
                const auto & page = j["page"];
                if (page.contains("offset"))
                    q.offset = page["offset"].get<std::size_t>();
                if (page.contains("limit") && ! page["limit"].is_null())
                    q.limit = page["limit"].get<std::size_t>();
            }
        }
        catch (const Json::exception & e) {
            throw query_error(std::string{"malformed search payload: "} + e.what());
        }
        return q;
    }

    auto to_json(const Query & q) -> Json
    {
        Json steps = Json::array();
        for (const auto & s : q.steps)
            steps.push_back(to_json(s));
        Json j{{"steps", steps}, {"sort", q.sort.invariant ? std::string{short_name(*q.sort.invariant)} : "id"}};
        Json page{{"offset", q.offset}};
        page["limit"] = q.limit ? Json(*q.limit) : Json(nullptr);
        j["page"] = page;
        return j;
    }
}

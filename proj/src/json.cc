#include <hog/codecs.hh>
#include <hog/error.hh>
#include <hog/json.hh>

namespace hog
{
    namespace
    {
        auto kind_name(ValueKind kind) -> std::string_view
        {
            switch (kind) {
            case ValueKind::rational: return "RATIONAL";
            case ValueKind::boolean: return "BOOLEAN";
            case ValueKind::undefined: return "UNDEFINED";
            }
            return "UNDEFINED";
        }

        auto invariant_from_name(const Json & j) -> InvariantId
        {
            auto name = j.get<std::string>();
            auto id = find_invariant(name);
            if (! id)
                throw format_error("unknown invariant '" + name + "'");
            return *id;
        }
    }

    auto to_json(const Rational & r) -> Json { return Json{{"num", r.num()}, {"den", r.den()}}; }

    auto rational_from_json(const Json & j) -> Rational
    {
        if (j.is_number_integer())
            return Rational{j.get<std::int64_t>()};
        if (j.is_string()) {
            auto r = Rational::parse(j.get<std::string>());
            if (! r)
                throw format_error("malformed rational '" + j.get<std::string>() + "'");
            return *r;
        }
        if (j.is_object() && j.contains("num") && j.contains("den") && j["num"].is_number_integer()
            && j["den"].is_number_integer()) {
            auto den = j["den"].get<std::int64_t>();
            if (den == 0)
                throw format_error("rational with zero denominator");
            return Rational{j["num"].get<std::int64_t>(), den};
        }
        throw format_error("expected a rational as {\"num\", \"den\"}, an integer or a string");
    }

    auto to_json(const InvariantValue & v) -> Json
    {
        Json j{{"status", value_status_name(v.status())}};
        if (auto kind = v.kind()) {
            j["kind"] = kind_name(*kind);
            if (auto r = v.rational())
                j["value"] = to_json(*r);
            else if (auto b = v.boolean())
                j["value"] = *b;
        }
        return j;
    }

    auto invariant_value_from_json(const Json & j) -> InvariantValue
    {
        auto status = j.at("status").get<std::string>();
        if (status == "PENDING")
            return InvariantValue::pending();
        if (status == "UNKNOWN")
            return InvariantValue::unknown();
        if (status != "COMPUTED")
            throw format_error("unknown invariant status '" + status + "'");
        auto kind = j.at("kind").get<std::string>();
        if (kind == "UNDEFINED")
            return InvariantValue::undefined();
        if (kind == "BOOLEAN")
            return InvariantValue::of(j.at("value").get<bool>());
        if (kind == "RATIONAL")
            return InvariantValue::of(rational_from_json(j.at("value")));
        throw format_error("unknown invariant kind '" + kind + "'");
    }

    auto to_json(const GraphRecord & r) -> Json
    {
        Json j;
        j["id"] = r.id;
        j["canonical_key"] = r.canonical_key.text;
        j["graph6"] = encode_graph6(r.graph);
        j["name"] = r.name ? Json(*r.name) : Json(nullptr);
        j["owner"] = r.owner;
        j["provenance"] = r.provenance ? Json(*r.provenance) : Json(nullptr);

        Json comments = Json::array();
        for (const auto & c : r.comments)
            comments.push_back(Json{{"author", c.author}, {"timestamp", c.timestamp}, {"text", c.text}});
        j["comments"] = std::move(comments);

        Json interesting = Json::array();
        for (auto id : r.interesting_for)
            interesting.push_back(short_name(id));
        j["interesting_for"] = std::move(interesting);

        Json values = Json::object();
        for (const auto & [id, value] : r.invariant_values)
            values[std::string{short_name(id)}] = to_json(value);
        j["invariants"] = std::move(values);

        Json embedding = Json::array();
        for (const auto & p : r.embedding)
            embedding.push_back(Json::array({p.x, p.y}));
        j["embedding"] = std::move(embedding);
        return j;
    }

    auto record_from_json(const Json & j) -> GraphRecord
    {
        try {
            GraphRecord r;
            r.id = j.at("id").get<RecordId>();
            r.canonical_key = CanonicalKey{j.at("canonical_key").get<std::string>()};
            r.graph = decode_graph6(j.at("graph6").get<std::string>());
            if (j.contains("name") && ! j["name"].is_null())
                r.name = j["name"].get<std::string>();
            r.owner = j.at("owner").get<UserId>();
            if (j.contains("provenance") && ! j["provenance"].is_null())
                r.provenance = j["provenance"].get<std::string>();
            for (const auto & c : j.at("comments"))
                r.comments.push_back(
                    Comment{c.at("author").get<UserId>(), c.at("timestamp").get<std::int64_t>(), c.at("text").get<std::string>()});
            for (const auto & name : j.at("interesting_for"))
                r.interesting_for.insert(invariant_from_name(name));
            for (const auto & [name, value] : j.at("invariants").items())
                r.invariant_values.emplace(invariant_from_name(Json(name)), invariant_value_from_json(value));
            for (const auto & p : j.at("embedding"))
                r.embedding.push_back(Point{p.at(0).get<double>(), p.at(1).get<double>()});
            return r;
        }
        catch (const Json::exception & e) {
            throw format_error(std::string{"malformed record: "} + e.what());
        }
    }

    auto to_json(const User & u) -> Json { return Json{{"id", u.id}, {"login", u.login}, {"token_hash", u.token_hash}}; }

    auto user_from_json(const Json & j) -> User
    {
        try {
            return User{j.at("id").get<UserId>(), j.at("login").get<std::string>(), j.at("token_hash").get<std::string>()};
        }
        catch (const Json::exception & e) {
            throw format_error(std::string{"malformed user: "} + e.what());
        }
    }
}

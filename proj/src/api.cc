#include <hog/api.hh>
#include <hog/codecs.hh>
#include <hog/error.hh>
#include <hog/query.hh>

#include <httplib.h>
#include <openssl/evp.h>

#include <charconv>

namespace hog
{
    namespace
    {
        auto json_response(int status, const Json & j) -> ApiResponse
        {
            return ApiResponse{status, "application/json", j.dump(), std::nullopt};
        }

        auto parse_body(const std::string & body) -> Json
        {
            try {
                return Json::parse(body);
            }
            catch (const Json::parse_error & e) {
                throw Error{ErrorCode::bad_format, "request body is not valid JSON", e.byte > 0 ? e.byte - 1 : 0};
            }
        }

        auto require_object(const Json & j) -> const Json &
        {
            if (! j.is_object())
                throw format_error("request body must be a JSON object");
            return j;
        }

        auto optional_string(const Json & j, const char * field) -> std::optional<std::string>
        {
            if (! j.contains(field) || j[field].is_null())
                return std::nullopt;
            if (! j[field].is_string())
                throw format_error(std::string{"\""} + field + "\" must be a string");
            return j[field].get<std::string>();
        }

        auto embedding_from_json(const Json & j) -> Embedding
        {
            if (! j.is_array())
                throw format_error("embedding must be an array of [x, y] pairs");
            Embedding e;
            for (const auto & p : j) {
                if (! p.is_array() || p.size() != 2 || ! p[0].is_number() || ! p[1].is_number())
                    throw format_error("embedding must be an array of [x, y] pairs");
                e.push_back(Point{p[0].get<double>(), p[1].get<double>()});
            }
            return e;
        }

        auto interesting_from_json(const Json & j) -> std::set<InvariantId>
        {
            if (! j.is_array())
                throw format_error("interesting_for must be an array of invariant names");
            std::set<InvariantId> result;
            for (const auto & name : j) {
                auto id = name.is_string() ? find_invariant(name.get<std::string>()) : std::nullopt;
                if (! id)
                    throw format_error("unknown invariant in interesting_for: " + name.dump());
                result.insert(*id);
            }
            return result;
        }

        auto metadata_from_json(const Json & j) -> GraphMetadata
        {
            GraphMetadata meta;
            meta.name = optional_string(j, "name");
            meta.provenance = optional_string(j, "provenance");
            if (j.contains("interesting_for") && ! j["interesting_for"].is_null())
                meta.interesting_for = interesting_from_json(j["interesting_for"]);
            if (j.contains("embedding") && ! j["embedding"].is_null())
                meta.embedding = embedding_from_json(j["embedding"]);
            return meta;
        }

        auto base64_decode(const std::string & text) -> Bytes
        {
            if (text.size() % 4 != 0)
                throw format_error("multicode payload is not valid base64");
            Bytes out(text.size() / 4 * 3);
            int n = EVP_DecodeBlock(out.data(), reinterpret_cast<const unsigned char *>(text.data()),
                static_cast<int>(text.size()));
            if (n < 0)
                throw format_error("multicode payload is not valid base64");
            std::size_t padding = 0;
            for (auto it = text.rbegin(); it != text.rend() && *it == '=' && padding < 2; ++it)
                ++padding;
            out.resize(static_cast<std::size_t>(n) - padding);
            return out;
        }

        auto multicode_payload(const Json & payload) -> Bytes
        {
            if (payload.is_string())
                return base64_decode(payload.get<std::string>());
            if (! payload.is_array())
                throw format_error("multicode payload must be base64 text or an array of byte values");
            Bytes bytes;
            for (std::size_t i = 0; i < payload.size(); ++i) {
                const auto & b = payload[i];
                if (! b.is_number_integer() || b.get<int>() < 0 || b.get<int>() > 255)
                    throw format_error("multicode payload byte out of range", i);
                bytes.push_back(static_cast<std::uint8_t>(b.get<int>()));
            }
            return bytes;
        }

        // Vertices are indexed from 0 in both the coordinate list and the edge list.
        auto drawn_payload(const Json & payload, GraphMetadata & meta) -> Graph
        {
            if (! payload.is_object() || ! payload.contains("vertices") || ! payload.contains("edges"))
                throw format_error("drawn payload needs \"vertices\" and \"edges\"");
            auto coordinates = embedding_from_json(payload["vertices"]);
            std::vector<Edge> edges;
            if (! payload["edges"].is_array())
                throw format_error("\"edges\" must be an array of [u, v] pairs");
            for (const auto & e : payload["edges"]) {
                if (! e.is_array() || e.size() != 2 || ! e[0].is_number_integer() || ! e[1].is_number_integer())
                    throw format_error("\"edges\" must be an array of [u, v] pairs");
                edges.emplace_back(e[0].get<int>(), e[1].get<int>());
            }
            auto g = Graph::from_edges(static_cast<int>(coordinates.size()), edges);
            if (! meta.embedding)
                meta.embedding = std::move(coordinates);
            return g;
        }

        auto single_graph(std::vector<Graph> graphs) -> Graph
        {
            if (graphs.size() != 1)
                throw format_error("payload must contain exactly one graph, found " + std::to_string(graphs.size()));
            return std::move(graphs.front());
        }

        auto parse_id(std::string_view text) -> std::optional<RecordId>
        {
            RecordId id = 0;
            auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), id);
            if (ec != std::errc{} || end != text.data() + text.size())
                return std::nullopt;
            return id;
        }

        auto format_param(const std::string & name) -> GraphFormat
        {
            auto format = parse_graph_format(name);
            if (! format)
                throw Error{ErrorCode::bad_query, "unknown download format \"" + name + "\""};
            return *format;
        }

        auto file_response(std::string data, GraphFormat format, const std::string & stem) -> ApiResponse
        {
            ApiResponse r;
            r.body = std::move(data);
            switch (format) {
            case GraphFormat::graph6: r.content_type = "text/plain"; r.filename = stem + ".g6"; break;
            case GraphFormat::multicode: r.content_type = "application/octet-stream"; r.filename = stem + ".mc"; break;
            case GraphFormat::edge_text: r.content_type = "text/plain"; r.filename = stem + ".txt"; break;
            case GraphFormat::readable: r.content_type = "text/plain"; r.filename = stem + "-readable.txt"; break;
            }
            return r;
        }

        auto to_json(const Job & job) -> Json
        {
            return Json{{"serial", job.serial}, {"graph", job.graph}, {"invariant", short_name(job.invariant)},
                {"budget_ns", job.budget.count()}, {"state", job_state_name(job.state)},
                {"priority", job.priority == CostClass::poly ? "POLY" : "EXP"}, {"diagnostic", job.diagnostic}};
        }
    }

    auto http_status(ErrorCode code) -> int
    {
        switch (code) {
        case ErrorCode::bad_format: return 400;
        case ErrorCode::bad_query: return 400;
        case ErrorCode::unauthenticated: return 401;
        case ErrorCode::not_owner: return 403;
        case ErrorCode::not_found: return 404;
        }
        return 400;
    }

    auto error_body(const Error & e) -> Json
    {
        Json err{{"code", error_code_name(e.code())}, {"message", e.what()}};
        if (e.offset())
            err["offset"] = *e.offset();
        if (e.line())
            err["line"] = *e.line();
        return Json{{"error", err}};
    }

    struct ApiService::Server
    {
        httplib::Server http;
    };

    ApiService::ApiService(Store & store, JobQueue * jobs) : _store(store), _jobs(jobs) {}

    ApiService::~ApiService()
    {
        stop();
    }

    auto ApiService::handle(const ApiRequest & request) -> ApiResponse
    {
        try {
            return dispatch(request);
        }
        catch (const Error & e) {
            return json_response(http_status(e.code()), error_body(e));
        }
        catch (const Json::exception & e) {
            Error err{ErrorCode::bad_format, std::string{"malformed request: "} + e.what()};
            return json_response(400, error_body(err));
        }
        catch (const std::exception & e) {
            Error err{ErrorCode::bad_format, e.what()};
            return json_response(400, error_body(err));
        }
    }

    auto ApiService::user_of(const ApiRequest & request) const -> UserId
    {
        if (! request.bearer)
            throw Error{ErrorCode::unauthenticated, "missing bearer token"};
        auto user = _store.authenticate(*request.bearer);
        if (! user)
            throw Error{ErrorCode::unauthenticated, "invalid bearer token"};
        return *user;
    }

    auto ApiService::dispatch(const ApiRequest & request) -> ApiResponse
    {
        const auto & m = request.method;
        std::string_view path = request.path;
        if (path.size() > 1 && path.back() == '/')
            path.remove_suffix(1);

        if (path == "/api/users/register" && m == "POST")
            return register_user(request);
        if (path == "/api/graphs" && m == "POST")
            return submit(request);
        if (path == "/api/search" && m == "POST")
            return search(request);
        if (path == "/api/invariants" && m == "GET")
            return invariants();
        if (path == "/api/jobs" && m == "GET")
            return job_counts();
        if (path == "/api/download" && m == "GET")
            return download(request);

        constexpr std::string_view graphs = "/api/graphs/";
        if (path.starts_with(graphs)) {
            auto rest = path.substr(graphs.size());
            auto slash = rest.find('/');
            auto id = parse_id(rest.substr(0, slash));
            auto tail = slash == std::string_view::npos ? std::string_view{} : rest.substr(slash);
            if (id) {
                if (tail.empty() && m == "GET")
                    return get_graph(*id, request);
                if (tail.empty() && m == "PATCH")
                    return patch_graph(*id, request);
                if (tail == "/comments" && m == "POST")
                    return comment(*id, request);
                if (tail == "/retry" && m == "POST")
                    return retry(*id, request);
            }
        }
        throw Error{ErrorCode::not_found, "no route for " + m + " " + request.path};
    }

    auto ApiService::register_user(const ApiRequest & request) -> ApiResponse
    {
        auto body = parse_body(request.body);
        auto login = optional_string(require_object(body), "login");
        if (! login)
            throw format_error("\"login\" is required");
        auto reg = _store.register_user(*login);
        return json_response(201, Json{{"id", reg.user.id}, {"login", reg.user.login}, {"token", reg.token}});
    }

    auto ApiService::submit(const ApiRequest & request) -> ApiResponse
    {
        auto user = user_of(request);
        auto body = parse_body(request.body);
        require_object(body);
        auto format = optional_string(body, "format");
        if (! format)
            throw format_error("\"format\" is required");
        if (! body.contains("payload"))
            throw format_error("\"payload\" is required");
        const auto & payload = body["payload"];
        auto meta = metadata_from_json(body);

        Graph g;
        if (*format == "drawn")
            g = drawn_payload(payload, meta);
        else if (*format == "multicode")
            g = single_graph(decode_multicode(multicode_payload(payload)));
        else if (*format == "graph6" || *format == "edge-text") {
            if (! payload.is_string())
                throw format_error("payload must be a string for " + *format);
            auto f = *format == "graph6" ? GraphFormat::graph6 : GraphFormat::edge_text;
            g = single_graph(decode_graphs(f, payload.get<std::string>()));
        }
        else
            throw format_error("unknown submission format \"" + *format + "\"");

        auto result = _store.insert_graph(g, meta, user);
        return json_response(result.created ? 201 : 200, Json{{"id", result.id}, {"created", result.created}});
    }

    auto ApiService::get_graph(RecordId id, const ApiRequest & request) -> ApiResponse
    {
        auto record = _store.get(id);
        if (! record)
            throw Error{ErrorCode::not_found, "no graph with id " + std::to_string(id)};
        if (auto f = request.query.find("format"); f != request.query.end()) {
            auto format = format_param(f->second);
            return file_response(export_records(std::span{&*record, 1}, format), format, "graph-" + std::to_string(id));
        }
        auto j = to_json(*record);
        if (auto owner = _store.find_user(record->owner))
            j["owner_login"] = owner->login;
        return json_response(200, j);
    }

    auto ApiService::patch_graph(RecordId id, const ApiRequest & request) -> ApiResponse
    {
        auto user = user_of(request);
        auto body = parse_body(request.body);
        auto record = _store.update_metadata(id, metadata_from_json(require_object(body)), user);
        return json_response(200, to_json(record));
    }

    auto ApiService::comment(RecordId id, const ApiRequest & request) -> ApiResponse
    {
        auto user = user_of(request);
        auto body = parse_body(request.body);
        auto text = optional_string(require_object(body), "text");
        if (! text)
            throw format_error("\"text\" is required");
        auto record = _store.add_comment(id, *text, user);
        return json_response(201, to_json(record));
    }

    auto ApiService::retry(RecordId id, const ApiRequest & request) -> ApiResponse
    {
        user_of(request);
        if (! _jobs)
            throw Error{ErrorCode::not_found, "this service has no job queue"};
        auto body = parse_body(request.body);
        require_object(body);
        auto name = optional_string(body, "invariant");
        auto budget = optional_string(body, "budget");
        if (! name || ! budget)
            throw format_error("\"invariant\" and \"budget\" are required");
        auto invariant = find_invariant(*name);
        if (! invariant)
            throw Error{ErrorCode::bad_query, "unknown invariant \"" + *name + "\""};
        auto parsed = parse_budget(*budget);
        if (! parsed)
            throw Error{ErrorCode::bad_query, "unreadable budget \"" + *budget + "\""};
        auto job = _jobs->retry(id, *invariant, *parsed);
        return json_response(202, to_json(job));
    }

    auto ApiService::search(const ApiRequest & request) -> ApiResponse
    {
        auto body = parse_body(request.body);
        auto q = query_from_json(body);
        if (body.contains("format") && ! body["format"].is_null()) {
            if (! body["format"].is_string())
                throw Error{ErrorCode::bad_query, "\"format\" must be a string"};
            auto format = format_param(body["format"].get<std::string>());
            return file_response(export_results(_store, q, format), format, "search");
        }
        auto page = run_query(_store, q);
        Json records = Json::array();
        for (const auto & r : page.records)
            records.push_back(to_json(r));
        Json j{{"total", page.total}, {"offset", q.offset}, {"records", std::move(records)}};
        j["limit"] = q.limit ? Json(*q.limit) : Json(nullptr);
        return json_response(200, j);
    }

    auto ApiService::download(const ApiRequest & request) -> ApiResponse
    {
        auto f = request.query.find("format");
        auto format = format_param(f == request.query.end() ? "graph6" : f->second);
        return file_response(export_results(_store, Query{}, format), format, "graphs");
    }

    auto ApiService::invariants() -> ApiResponse
    {
        Json list = Json::array();
        for (const auto & info : invariant_registry())
            list.push_back(Json{{"short_name", info.short_name}, {"display_name", info.display_name},
                {"cost", info.cost == CostClass::poly ? "POLY" : "EXP"}, {"boolean", info.boolean_valued}});
        return json_response(200, list);
    }

    auto ApiService::job_counts() -> ApiResponse
    {
        if (! _jobs)
            return json_response(200, Json{{"QUEUED", 0}, {"RUNNING", 0}, {"DONE", 0}, {"TIMED_OUT", 0}});
        auto c = _jobs->counts();
        return json_response(200, Json{{"QUEUED", c.queued}, {"RUNNING", c.running}, {"DONE", c.done},
            {"TIMED_OUT", c.timed_out}});
    }

    auto ApiService::bind(const std::string & host, int port) -> bool
    {
        _server = std::make_unique<Server>();
        auto & http = _server->http;
        auto route = [this](const httplib::Request & req, httplib::Response & res) {
            ApiRequest request;
            request.method = req.method;
            request.path = req.path;
            for (const auto & [k, v] : req.params)
                request.query.emplace(k, v);
            auto auth = req.get_header_value("Authorization");
            if (auth.starts_with("Bearer "))
                request.bearer = auth.substr(7);
            request.body = req.body;
            auto response = handle(request);
            res.status = response.status;
            if (response.filename)
                res.set_header("Content-Disposition", "attachment; filename=\"" + *response.filename + "\"");
            res.set_content(response.body, response.content_type);
        };
        http.set_default_headers({{"Access-Control-Allow-Origin", "*"},
            {"Access-Control-Allow-Headers", "Authorization, Content-Type"},
            {"Access-Control-Allow-Methods", "GET, POST, PATCH, OPTIONS"}});
        http.Get(".*", route);
        http.Post(".*", route);
        http.Patch(".*", route);
        http.Options(".*", [](const httplib::Request &, httplib::Response & res) { res.status = 204; });

        if (port == 0) {
            _port = http.bind_to_any_port(host);
            return _port > 0;
        }
        _port = port;
        return http.bind_to_port(host, port);
    }

    void ApiService::listen()
    {
        if (_server)
            _server->http.listen_after_bind();
    }

    void ApiService::stop()
    {
        if (_server)
            _server->http.stop();
    }
}

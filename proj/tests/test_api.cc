#include "helpers.hh"

#include <hog/api.hh>
#include <hog/canonical.hh>
#include <hog/codecs.hh>
#include <hog/query.hh>
#include <hog/seed.hh>

#include <doctest.h>
#include <httplib.h>

#include <thread>

using namespace hog;

namespace
{
    struct Fixture
    {
        std::unique_ptr<Store> store = testing::seeded_store();
        JobQueue jobs{*store};
        ApiService api{*store, &jobs};

        auto call(std::string method, std::string path, const Json & body = nullptr,
            std::optional<std::string> token = std::nullopt) -> std::pair<int, Json>
        {
            ApiRequest r;
            r.method = std::move(method);
            auto q = path.find('?');
            if (q != std::string::npos) {
                auto params = path.substr(q + 1);
                auto eq = params.find('=');
                r.query.emplace(params.substr(0, eq), params.substr(eq + 1));
                path.resize(q);
            }
            r.path = std::move(path);
            r.bearer = std::move(token);
            r.body = body.is_null() ? "" : body.dump();
            auto response = api.handle(r);
            if (response.content_type != "application/json")
                return {response.status, Json(response.body)};
            return {response.status, Json::parse(response.body)};
        }

        auto token(const std::string & login) -> std::string
        {
            return call("POST", "/api/users/register", Json{{"login", login}}).second["token"].get<std::string>();
        }
    };

    auto error_code(const Json & j) -> std::string
    {
        REQUIRE(j.contains("error"));
        return j["error"]["code"].get<std::string>();
    }
}

TEST_SUITE("api-service")
{
    TEST_CASE("registration and submission")
    {
        Fixture f;
        auto ann = f.token("ann");
        auto [dup_status, dup] = f.call("POST", "/api/users/register", Json{{"login", "ann"}});
        CHECK(dup_status == 400);
        CHECK(error_code(dup) == "BAD_FORMAT");

        auto [status, made] = f.call("POST", "/api/graphs", Json{{"format", "graph6"}, {"payload", "E?~o"}}, ann);
        CHECK(status == 201);
        CHECK(made["created"] == true);
        auto id = made["id"].get<RecordId>();

        auto [s2, k3] = f.call("POST", "/api/graphs",
            Json{{"format", "edge-text"}, {"payload", "n=3\n3 1\n1 2\n2 3\n"}}, ann);
        CHECK(s2 == 200);
        CHECK(k3["created"] == false);
        CHECK(k3["id"] == f.store->lookup_by_canonical(canonical_key(complete_graph(3)))->id);

        auto [s3, unauth] = f.call("POST", "/api/graphs", Json{{"format", "graph6"}, {"payload", "Bw"}});
        CHECK(s3 == 401);
        CHECK(error_code(unauth) == "UNAUTHENTICATED");
        auto [s4, bad] = f.call("POST", "/api/graphs", Json{{"format", "graph6"}, {"payload", "B!"}}, ann);
        CHECK(s4 == 400);
        CHECK(error_code(bad) == "BAD_FORMAT");
        CHECK(bad["error"]["offset"] == 1);
        auto [s5, two] = f.call("POST", "/api/graphs", Json{{"format", "graph6"}, {"payload", "Bw\nA_\n"}}, ann);
        CHECK(error_code(two) == "BAD_FORMAT");
        auto [s6, notjson] = f.call("POST", "/api/graphs", nullptr, ann);
        CHECK(error_code(notjson) == "BAD_FORMAT");

        auto [s7, record] = f.call("GET", "/api/graphs/" + std::to_string(id));
        CHECK(s7 == 200);
        CHECK(record["invariants"]["chi"]["status"] == "PENDING");
        CHECK(record["owner_login"] == "ann");
    }

    TEST_CASE("multicode and drawn submissions")
    {
        Fixture f;
        auto ann = f.token("ann");
        // 4 vertices, path 1-2-3-4 as raw bytes and as base64.
        auto [s1, a] = f.call("POST", "/api/graphs",
            Json{{"format", "multicode"}, {"payload", Json::array({4, 2, 0, 3, 0, 4, 0})}}, ann);
        CHECK(a["id"] == f.store->lookup_by_canonical(canonical_key(path_graph(4)))->id);
        auto [s2, b] = f.call("POST", "/api/graphs", Json{{"format", "multicode"}, {"payload", "BAIAAwAEAA=="}}, ann);
        CHECK(b["id"] == a["id"]);

        Json drawn{{"vertices", Json::array({Json::array({0, 0}), Json::array({1, 0}), Json::array({0.5, 2})})},
            {"edges", Json::array({Json::array({0, 1})})}};
        auto [s3, c] = f.call("POST", "/api/graphs", Json{{"format", "drawn"}, {"payload", drawn}}, ann);
        CHECK(s3 == 201);
        auto record = *f.store->get(c["id"].get<RecordId>());
        std::set<std::pair<double, double>> points;
        for (const auto & p : record.embedding)
            points.emplace(p.x, p.y);
        CHECK(points == std::set<std::pair<double, double>>{{0, 0}, {1, 0}, {0.5, 2}});
        // The isolated vertex keeps its drawn position.
        for (int v = 0; v < 3; ++v)
            if (record.graph.degree(v) == 0)
                CHECK(record.embedding[v] == Point{0.5, 2});

        Json loop{{"vertices", Json::array({Json::array({0, 0})})}, {"edges", Json::array({Json::array({0, 0})})}};
        auto [s4, d] = f.call("POST", "/api/graphs", Json{{"format", "drawn"}, {"payload", loop}}, ann);
        CHECK(error_code(d) == "BAD_FORMAT");
    }

    TEST_CASE("search matches the query module")
    {
        Fixture f;
        Json body{{"steps", Json::array({Json{{"type", "range"}, {"invariant", "girth"}, {"low", 6}, {"high", 6}},
                                Json{{"type", "bool"}, {"invariant", "regular"}, {"value", true}},
                                Json{{"type", "range"}, {"invariant", "avgdeg"}, {"low", 3}, {"high", 3}},
                                Json{{"type", "range"}, {"invariant", "n"}, {"low", 14}, {"high", 14}}})}};
        auto [status, page] = f.call("POST", "/api/search", body);
        CHECK(status == 200);
        CHECK(page["total"] == 1);
        CHECK(page["records"][0]["name"] == "Heawood graph");
        CHECK(page["records"][0]["invariants"]["girth"]["value"]["num"] == 6);

        auto q = query_from_json(body);
        CHECK(page["records"][0]["id"] == query_ids(*f.store, q).front());

        body["format"] = "graph6";
        auto [s2, file] = f.call("POST", "/api/search", body);
        CHECK(s2 == 200);
        auto text = file.get<std::string>();
        auto graphs = decode_graph6_stream(text);
        REQUIRE(graphs.size() == 1);
        CHECK(is_isomorphic(graphs[0], heawood_graph()));
        CHECK(std::count(text.begin(), text.end(), '\n') == 1);

        auto [s3, bad] = f.call("POST", "/api/search",
            Json{{"steps", Json::array({Json{{"type", "range"}, {"invariant", "sigma"}, {"low", 1}}})}});
        CHECK(s3 == 400);
        CHECK(error_code(bad) == "BAD_QUERY");
        auto [s4, bad_expr] = f.call("POST", "/api/search",
            Json{{"steps", Json::array({Json{{"type", "expr"}, {"expression", "chi <"}}})}});
        CHECK(error_code(bad_expr) == "BAD_QUERY");
        CHECK(bad_expr["error"]["offset"] == 6);
    }

    TEST_CASE("ownership and comments")
    {
        Fixture f;
        auto ann = f.token("ann");
        auto bob = f.token("bob");
        auto id = f.call("POST", "/api/graphs", Json{{"format", "graph6"}, {"payload", "G?????"}}, ann)
                      .second["id"]
                      .get<RecordId>();
        auto path = "/api/graphs/" + std::to_string(id);

        auto [s1, denied] = f.call("PATCH", path, Json{{"name", "eight isolated"}}, bob);
        CHECK(s1 == 403);
        CHECK(error_code(denied) == "NOT_OWNER");
        auto [s2, ok] = f.call("PATCH", path, Json{{"name", "eight isolated"}, {"interesting_for", {"chi"}}}, ann);
        CHECK(s2 == 200);
        CHECK(ok["name"] == "eight isolated");

        auto [s3, commented] = f.call("POST", path + "/comments", Json{{"text", "edgeless witness xyzzy"}}, bob);
        CHECK(s3 == 201);
        auto [s4, view] = f.call("GET", path);
        CHECK(view["comments"].size() == 1);
        CHECK(view["comments"][0]["text"] == "edgeless witness xyzzy");
        auto [s5, found] = f.call("POST", "/api/search",
            Json{{"steps", Json::array({Json{{"type", "keyword"}, {"text", "XYZZY"}}})}});
        CHECK(found["total"] == 1);
        CHECK(found["records"][0]["id"] == id);

        auto [s6, missing] = f.call("GET", "/api/graphs/9999");
        CHECK(s6 == 404);
        CHECK(error_code(missing) == "NOT_FOUND");
        auto [s7, anon] = f.call("POST", path + "/comments", Json{{"text", "hi"}});
        CHECK(error_code(anon) == "UNAUTHENTICATED");
    }

    TEST_CASE("registry, jobs, downloads")
    {
        Fixture f;
        auto [s1, reg] = f.call("GET", "/api/invariants");
        CHECK(reg.size() == 17);
        CHECK(reg[12]["short_name"] == "chi");
        CHECK(reg[12]["cost"] == "EXP");

        auto ann = f.token("ann");
        f.call("POST", "/api/graphs", Json{{"format", "graph6"}, {"payload", "G?????"}}, ann);
        auto [s2, counts] = f.call("GET", "/api/jobs");
        CHECK(counts["QUEUED"] == 0); // the fixture queue is not attached

        auto [s3, all] = f.call("GET", "/api/download?format=g6");
        CHECK(decode_graph6_stream(all.get<std::string>()).size() == f.store->size());
        auto heawood = f.store->lookup_by_canonical(canonical_key(heawood_graph()))->id;
        auto [s4, one] = f.call("GET", "/api/graphs/" + std::to_string(heawood) + "?format=readable");
        CHECK(one.get<std::string>().find("girth = 6") != std::string::npos);
        auto [s5, bad] = f.call("GET", "/api/download?format=sparse6");
        CHECK(error_code(bad) == "BAD_QUERY");
        auto [s6, none] = f.call("DELETE", "/api/graphs/1");
        CHECK(error_code(none) == "NOT_FOUND");
    }

    TEST_CASE("retry endpoint")
    {
        Store store;
        JobQueue jobs{store, std::chrono::microseconds{1}};
        ApiService api{store, &jobs};
        auto reg = store.register_user("ann");
        auto hard = mycielskian(mycielskian(mycielskian(mycielskian(cycle_graph(5)))));
        auto id = store.insert_graph(hard, GraphMetadata{}, reg.user.id).id;
        jobs.enqueue_all(id);
        jobs.drain();
        REQUIRE(store.get(id)->value(InvariantId::chi).status() == ValueStatus::unknown);
        ApiRequest r{"POST", "/api/graphs/" + std::to_string(id) + "/retry", {}, reg.token,
            Json{{"invariant", "chi"}, {"budget", "1us"}}.dump(), };
        CHECK(api.handle(r).status == 400);
        r.body = Json{{"invariant", "chi"}, {"budget", "2ms"}}.dump();
        auto ok = api.handle(r);
        CHECK(ok.status == 202);
        CHECK(Json::parse(ok.body)["state"] == "QUEUED");
    }

    TEST_CASE("over a real socket")
    {
        Fixture f;
        REQUIRE(f.api.bind("127.0.0.1", 0));
        std::thread server{[&] { f.api.listen(); }};
        httplib::Client client{"127.0.0.1", f.api.port()};
        auto reg = client.Post("/api/users/register", R"({"login":"net"})", "application/json");
        REQUIRE(reg);
        CHECK(reg->status == 201);
        auto token = Json::parse(reg->body)["token"].get<std::string>();

        httplib::Headers auth{{"Authorization", "Bearer " + token}};
        auto sub = client.Post("/api/graphs", auth, R"({"format":"graph6","payload":"Bw"})", "application/json");
        REQUIRE(sub);
        CHECK(sub->status == 200);
        CHECK(Json::parse(sub->body)["created"] == false);

        auto inv = client.Get("/api/invariants");
        REQUIRE(inv);
        CHECK(Json::parse(inv->body).size() == 17);
        auto dl = client.Get("/api/download?format=mc");
        REQUIRE(dl);
        CHECK(dl->get_header_value("Content-Type") == "application/octet-stream");
        auto bytes = Bytes(dl->body.begin(), dl->body.end());
        CHECK(decode_multicode(bytes).size() == f.store->size());
        f.api.stop();
        server.join();
    }
}

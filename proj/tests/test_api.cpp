#include "clusterforge/api.hpp"
#include "clusterforge/catalog.hpp"
#include "clusterforge/io.hpp"

#include <doctest.h>
#include <httplib.h>

#include <thread>

using namespace cf;
using io::json;

namespace {

json post(const std::string& path, const json& body, int expect = 200) {
    const api::Response r = api::handle("POST", path, body.dump());
    CHECK(r.status == expect);
    return json::parse(r.body);
}

}  // namespace

TEST_CASE("health") {
    const api::Response r = api::handle("GET", "/api/health", "");
    CHECK(r.status == 200);
    CHECK(json::parse(r.body) == json{{"status", "ok"}});
}

TEST_CASE("quiver/mutate") {
    const json out = post("/api/quiver/mutate", {{"b_matrix", io::b_matrix_json(catalog::linear_a(3))}, {"k", 2}});
    CHECK(io::quiver_from_b_matrix_json(out["b_matrix"]) == mutate(catalog::linear_a(3), 1));
}

TEST_CASE("cluster/step replays the history and appends k") {
    const json b = io::b_matrix_json(catalog::linear_a(2));
    const json out = post("/api/cluster/step", {{"b_matrix", b}, {"history", {1}}, {"k", 2}});
    CHECK(out["history"] == json{1, 2});
    CHECK(out["variables"].size() == 2);
    CHECK(out["g_matrix"].size() == 2);
    CHECK(out["g_matrix"][0][0].is_string());
    Seed s = mutate_seed(mutate_seed(initial_seed(catalog::linear_a(2)), 0), 1);
    CHECK(out["variables"][0] == s.cluster[0].to_string());
    CHECK(io::quiver_from_b_matrix_json(out["b_matrix"]) == s.exchange_quiver());

    const json none = post("/api/cluster/step", {{"b_matrix", b}});
    CHECK(none["history"].empty());
    CHECK(none["variables"][0] == "x1");
}

TEST_CASE("classify") {
    const json out = post("/api/classify", {{"b_matrix", io::b_matrix_json(catalog::x7())}, {"budget", "1000"}});
    CHECK(out["verdict"] == "ExceptionalFiniteMut(X7)");
    CHECK(out["type"] == "ExceptionalFiniteMut");
    CHECK(out["name"] == "X7");
    CHECK(out["class_size"] == "2");
}

TEST_CASE("gfan/contains") {
    const json b = io::b_matrix_json(catalog::linear_a(2));
    const json in = post("/api/gfan/contains", {{"b_matrix", b}, {"v", {"-1", "1/2"}}});
    CHECK(in["verdict"] == "InCone");
    CHECK(in["coords"].size() == 2);
    const json out = post("/api/gfan/contains",
                          {{"b_matrix", io::b_matrix_json(catalog::kronecker(2))}, {"v", {1, -1}}, {"depth", 20}});
    CHECK(out["verdict"] == "NotFoundWithin(20)");
}

TEST_CASE("errors map to 4xx with a code") {
    CHECK(api::handle("GET", "/api/nope", "").status == 404);
    CHECK(api::handle("GET", "/api/classify", "").status == 405);
    CHECK(api::handle("POST", "/api/health", "").status == 405);
    CHECK(post("/api/classify", json::object(), 400)["error"] == "ParseError");
    CHECK(api::handle("POST", "/api/classify", "{not json").status == 400);
    CHECK(post("/api/quiver/mutate", {{"b_matrix", {{0, 1}, {-1, 0}}}, {"k", 3}}, 400)["error"] == "InvalidVertex");
    CHECK(post("/api/quiver/mutate", {{"b_matrix", {{0, 1}, {1, 0}}}, {"k", 1}}, 400)["error"] == "NotSkewSymmetric");
    CHECK(post("/api/gfan/contains", {{"b_matrix", {{0, 1}, {-1, 0}}}, {"v", {0, 0}}}, 400).contains("message"));
    CHECK(post("/api/classify", {{"b_matrix", {{0}}}, {"budget", "x"}}, 400)["error"] == "ParseError");
}

TEST_CASE("served over HTTP") {
    httplib::Server server;
    api::install(server);
    const int port = server.bind_to_any_port("127.0.0.1");
    REQUIRE(port > 0);
    std::thread worker([&] { server.listen_after_bind(); });
    server.wait_until_ready();

    httplib::Client client("127.0.0.1", port);
    const auto health = client.Get("/api/health");
    REQUIRE(health);
    CHECK(health->status == 200);
    CHECK(json::parse(health->body)["status"] == "ok");

    const json req = {{"b_matrix", io::b_matrix_json(catalog::oriented_cycle(3))}, {"k", 1}};
    const auto res = client.Post("/api/quiver/mutate", req.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    CHECK(res->get_header_value("Content-Type") == "application/json");
    CHECK(io::quiver_from_b_matrix_json(json::parse(res->body)["b_matrix"]) == mutate(catalog::oriented_cycle(3), 0));

    const auto bad = client.Post("/api/quiver/mutate", "[]", "application/json");
    REQUIRE(bad);
    CHECK(bad->status == 400);

    server.stop();
    worker.join();
}

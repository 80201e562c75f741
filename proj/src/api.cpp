#include "clusterforge/api.hpp"

#include "clusterforge/cluster.hpp"
#include "clusterforge/error.hpp"
#include "clusterforge/gfan.hpp"
#include "clusterforge/io.hpp"
#include "clusterforge/quiver.hpp"

#include <httplib.h>

#include <algorithm>

namespace cf::api {

namespace {

using io::json;

int vertex(const json& j, int n, const char* what) {
    if (!j.is_number_integer()) throw Error(Errc::ParseError, std::string(what) + " must be an integer");
    const int k = j.get<int>();
    if (k < 1 || k > n) throw Error(Errc::InvalidVertex, std::string(what) + " out of range: " + std::to_string(k));
    return k - 1;
}

const json& need(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(Errc::ParseError, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

json quiver_mutate(const json& req) {
    const Quiver q = io::quiver_from_b_matrix_json(need(req, "b_matrix"));
    const int k = vertex(need(req, "k"), q.size(), "k");
    return {{"b_matrix", io::b_matrix_json(mutate(q, k))}};
}

json cluster_step(const json& req) {
    const Quiver q = io::quiver_from_b_matrix_json(need(req, "b_matrix"));
    const int n = q.size();
    std::vector<int> history;
    if (req.contains("history"))
        for (const json& k : req.at("history")) history.push_back(vertex(k, n, "history entry"));
    if (req.contains("k") && !req.at("k").is_null()) history.push_back(vertex(req.at("k"), n, "k"));

    Seed s = initial_seed(q);
    TropicalSeed t = initial_tropical_seed(q);
    for (int k : history) {
        s = mutate_seed(s, k);
        t = mutate_tropical(t, k);
    }
    json g = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) row.push_back(std::to_string(t.gij(i, j)));
        g.push_back(row);
    }
    json vars = json::array();
    for (const auto& x : s.cluster) vars.push_back(x.to_string());
    json hist = json::array();
    for (int k : history) hist.push_back(k + 1);
    return {{"b_matrix", io::b_matrix_json(s.exchange_quiver())}, {"g_matrix", g}, {"variables", vars},
            {"history", hist}};
}

json classify_endpoint(const json& req) {
    const Quiver q = io::quiver_from_b_matrix_json(need(req, "b_matrix"));
    std::size_t budget = 100000;
    if (req.contains("budget")) {
        const long b = req.at("budget").is_string() ? std::stol(req.at("budget").get<std::string>())
                                                    : req.at("budget").get<long>();
        if (b < 1) throw Error(Errc::ParseError, "budget must be positive");
        budget = static_cast<std::size_t>(b);
    }
    const Classification c = classify(q, budget);
    return {{"verdict", to_string(c)},
            {"type", to_string(c.type)},
            {"name", c.name},
            {"class_size", std::to_string(c.class_size)}};
}

json gfan_contains(const json& req) {
    const Quiver q = io::quiver_from_b_matrix_json(need(req, "b_matrix"));
    std::vector<Rational> v;
    for (const json& x : need(req, "v"))
        v.push_back(x.is_string() ? parse_rational(x.get<std::string>()) : Rational(x.get<long>()));
    const int depth = req.contains("depth") ? req.at("depth").get<int>() : 50;
    if (depth < 0) throw Error(Errc::ParseError, "depth must be nonnegative");
    if (std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
        throw Error(Errc::InvalidVertex, "v must be nonzero");
    const Membership m = contains_point(q, v, depth);
    json hist = json::array();
    for (int k : m.history) hist.push_back(k + 1);
    json coords = json::array();
    for (const auto& c : m.coords) coords.push_back(to_string(c));
    return {{"verdict", m.in_cone ? "InCone" : "NotFoundWithin(" + std::to_string(depth) + ")"},
            {"history", hist},
            {"coords", coords}};
}

Response ok(const json& j) { return {200, j.dump()}; }

Response fail(int status, const std::string& code, const std::string& msg) {
    return {status, json{{"error", code}, {"message", msg}}.dump()};
}

}  // namespace

Response handle(const std::string& method, const std::string& path, const std::string& body) {
    using Handler = json (*)(const json&);
    static const std::pair<const char*, Handler> routes[] = {
        {"/api/quiver/mutate", quiver_mutate},
        {"/api/cluster/step", cluster_step},
        {"/api/classify", classify_endpoint},
        {"/api/gfan/contains", gfan_contains},
    };
    if (path == "/api/health") {
        if (method != "GET") return fail(405, "MethodNotAllowed", "use GET");
        return ok({{"status", "ok"}});
    }
    for (const auto& [route, fn] : routes) {
        if (path != route) continue;
        if (method != "POST") return fail(405, "MethodNotAllowed", "use POST");
        try {
            return ok(fn(io::parse_json(body)));
        } catch (const Error& e) {
            return fail(400, errc_name(e.code()), e.what());
        } catch (const json::exception& e) {
            return fail(400, errc_name(Errc::ParseError), e.what());
        } catch (const std::invalid_argument& e) {
            return fail(400, errc_name(Errc::ParseError), e.what());
        } catch (const std::out_of_range& e) {
            return fail(400, errc_name(Errc::ParseError), e.what());
        }
    }
    return fail(404, "NotFound", path);
}

void install(httplib::Server& server) {
    auto forward = [](const httplib::Request& req, httplib::Response& res) {
        const Response r = handle(req.method, req.path, req.body);
        res.status = r.status;
        res.set_content(r.body, "application/json");
    };
    server.Get(R"(/api/.*)", forward);
    server.Post(R"(/api/.*)", forward);
}

bool serve(const std::string& host, int port) {
    httplib::Server server;
    install(server);
    return server.listen(host, port);
}

}  // namespace cf::api

#pragma once

#include <string>

namespace httplib {
class Server;
}

// JSON-over-HTTP service backing the explorer. `handle` is the whole service
// as a pure function; `serve` only wires it to a socket.
//
//   GET  /api/health
//   POST /api/quiver/mutate  {b_matrix, k}                -> {b_matrix}
//   POST /api/cluster/step   {b_matrix, history, k}       -> {b_matrix, g_matrix, variables, history}
//   POST /api/classify       {b_matrix, budget}           -> {verdict, type, name, class_size}
//   POST /api/gfan/contains  {b_matrix, v, depth}         -> {verdict, history, coords}
//
// Vertices (k, history) are 1-based. Matrix entries may be sent as numbers or
// decimal strings; g-matrix entries and coordinates are returned as strings.
// Failures answer 400 with {error, message}; unknown paths 404; wrong
// methods 405.
namespace cf::api {

struct Response {
    int status = 200;
    std::string body;  // JSON
};

Response handle(const std::string& method, const std::string& path, const std::string& body);

// Routes GET and POST under /api/ to `handle`.
void install(httplib::Server& server);

// Blocks serving on host:port until the process ends.
// Returns false if the socket cannot be bound.
bool serve(const std::string& host, int port);

}  // namespace cf::api

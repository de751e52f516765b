#include "edom/http.hpp"

#include <httplib.h>

#include <ostream>

#include "edom/service.hpp"

namespace edom {

namespace {

void send_json(httplib::Response& res, const Json& body, int status = 200) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

template <class Handler>
auto guarded(Handler handler) {
  return [handler](const httplib::Request& req, httplib::Response& res) {
    try {
      handler(req, res);
    } catch (const ServiceError& e) {
      send_json(res, e.to_json(), e.http_status());
    } catch (const Json::exception& e) {
      send_json(res, ServiceError("bad_request", std::string("malformed JSON body: ") + e.what(), 400).to_json(), 400);
    } catch (const std::exception& e) {
      send_json(res, ServiceError("internal", e.what(), 500).to_json(), 500);
    }
  };
}

Json parse_body(const httplib::Request& req) {
  Json body = Json::parse(req.body);
  if (!body.is_object()) throw ServiceError("bad_request", "request body must be a JSON object", 400);
  return body;
}

}  // namespace

void register_routes(httplib::Server& server, SessionStore& store) {
  server.Post("/session", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    Json body = parse_body(req);
    send_json(res, store.create(body.at("tree").get<std::string>(), body.at("k").get<int>()), 201);
  }));
  server.Get(R"(/session/([0-9a-f]+))", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    send_json(res, store.get(req.matches[1]));
  }));
  server.Post(R"(/session/([0-9a-f]+)/place)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    Json body = parse_body(req);
    send_json(res, store.place(req.matches[1], body.at("vertices").get<std::vector<Vertex>>()));
  }));
  server.Post(R"(/session/([0-9a-f]+)/defend)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    Json body = parse_body(req);
    if (body.value("forfeit", false)) {
      send_json(res, store.defend(req.matches[1], std::nullopt));
      return;
    }
    std::vector<Move> moves;
    for (const Json& m : body.at("moves")) {
      if (!m.is_array() || m.size() != 2) throw ServiceError("bad_request", "each move must be [from, to]", 400);
      moves.push_back({m[0].get<Vertex>(), m[1].get<Vertex>()});
    }
    send_json(res, store.defend(req.matches[1], DefenseMove(std::move(moves))));
  }));
  server.Get(R"(/session/([0-9a-f]+)/trace)", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    send_json(res, store.trace(req.matches[1]));
  }));
}

int run_server(int port, std::ostream& log) {
  SessionStore store;
  httplib::Server server;
  register_routes(server, store);
  log << "serving on http://127.0.0.1:" << port << std::endl;
  if (!server.listen("127.0.0.1", port)) {
    log << "cannot listen on port " << port << std::endl;
    return 1;
  }
  return 0;
}

}  // namespace edom

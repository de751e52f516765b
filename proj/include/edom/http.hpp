#pragma once

#include <iosfwd>

namespace httplib {
class Server;
}

namespace edom {

class SessionStore;

// POST /session, GET /session/{id}, POST /session/{id}/place,
// POST /session/{id}/defend, GET /session/{id}/trace.
void register_routes(httplib::Server& server, SessionStore& store);

// Blocks serving the game API on localhost:port.
int run_server(int port, std::ostream& log);

}  // namespace edom

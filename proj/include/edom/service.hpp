#pragma once

#include <chrono>
#include <iosfwd>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "edom/json.hpp"
#include "edom/guards.hpp"
#include "edom/engine.hpp"

namespace edom {

class ServiceError : public std::runtime_error {
 public:
  ServiceError(std::string code, const std::string& message, int status)
      : std::runtime_error(message), code_(std::move(code)), status_(status) {}
  const std::string& code() const { return code_; }
  int http_status() const { return status_; }
  Json to_json() const { return Json{{"code", code_}, {"message", what()}}; }

 private:
  std::string code_;
  int status_;
};

struct Session;

// In-memory game sessions where a human defends against the theorem
// attacker. Operations on one session are serialized; distinct sessions are
// independent. Every call returns the session's full state as JSON.
class SessionStore {
 public:
  using Clock = std::chrono::steady_clock;

  explicit SessionStore(std::chrono::seconds idle_ttl = std::chrono::hours(1));
  ~SessionStore();

  Json create(const std::string& tree_text, int k);
  Json get(const std::string& id);
  Json place(const std::string& id, const std::vector<Vertex>& vertices);
  // nullopt forfeits. Illegal moves are rejected and leave the phase as is.
  Json defend(const std::string& id, const std::optional<DefenseMove>& move);
  Json trace(const std::string& id);

  // Drops sessions idle for longer than the TTL; returns how many.
  std::size_t expire_idle(Clock::time_point now = Clock::now());
  std::size_t size() const;

 private:
  std::shared_ptr<Session> find(const std::string& id);

  std::chrono::seconds idle_ttl_;
  mutable std::shared_mutex mutex_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t next_id_ = 0;
  std::uint64_t salt_;
};

}  // namespace edom

#include "edom/service.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <random>
#include <sstream>

#include "edom/analysis.hpp"
#include "edom/attack.hpp"

namespace edom {

enum class Phase { AwaitingPlacement, AwaitingDefense, Finished };

struct Session {
  Session(std::string id_, std::shared_ptr<const Analysis> a, int k_)
      : id(std::move(id_)), analysis(a), k(k_), attacker(a) {}

  std::string id;
  std::shared_ptr<const Analysis> analysis;
  int k;
  GuardConfig config;
  AttackerState attacker;
  GameTrace trace;
  Phase phase = Phase::AwaitingPlacement;
  Vertex attacked = kNoVertex;
  bool fallback_attacker = false;
  std::optional<AttackDiagnostic> diagnostic;
  std::atomic<SessionStore::Clock::time_point> last_access{SessionStore::Clock::now()};
  std::shared_mutex mutex;
};

namespace {

const char* class_color(VertexClass c) {
  switch (c) {
    case VertexClass::J: return "orange";
    case VertexClass::I: return "yellow";
    case VertexClass::L: return "green";
  }
  return "grey";
}

const char* phase_name(Phase p) {
  switch (p) {
    case Phase::AwaitingPlacement: return "awaiting_placement";
    case Phase::AwaitingDefense: return "awaiting_defense";
    case Phase::Finished: return "finished";
  }
  return "?";
}

Json state_json(const Session& s) {
  const Analysis& a = *s.analysis;
  Json j;
  j["id"] = s.id;
  j["tree"] = serialize_edge_list(a.tree());
  j["n"] = a.rooted.size();
  j["k"] = s.k;
  j["edn"] = a.edn;
  j["diameter"] = a.diameter;
  j["root"] = a.rooted.root();
  j["phase"] = phase_name(s.phase);
  j["attacked"] = s.phase == Phase::AwaitingDefense ? Json(s.attacked) : Json(nullptr);
  j["turn"] = s.trace.turn_count() + (s.phase == Phase::AwaitingDefense ? 1 : 0);
  j["config"] = std::vector<Vertex>(s.config.begin(), s.config.end());
  if (s.trace.outcome) {
    j["outcome"] = trace_to_json(s.trace)["outcome"];
  } else {
    j["outcome"] = nullptr;
  }

  Json ann;
  Json summary = neocol_to_json(a);
  ann["parts"] = summary["parts"];
  ann["classes"] = summary["classes"];
  Json colors = Json::array();
  for (Vertex v = 0; v < a.rooted.size(); ++v) colors.push_back(class_color(a.classes[v]));
  ann["colors"] = std::move(colors);
  if (auto ref = s.attacker.reference_attack(); ref && s.phase != Phase::AwaitingPlacement) {
    ann["deficits"] = s.attacker.subtree_deficits(s.config, *ref);
  } else {
    ann["deficits"] = nullptr;
  }
  if (s.phase == Phase::AwaitingDefense) ann["last_attack"] = s.attacked;
  else if (!s.trace.turns.empty()) ann["last_attack"] = s.trace.turns.back().attack;
  else ann["last_attack"] = nullptr;
  ann["attacker_mode"] = s.fallback_attacker ? "fallback" : "theorem";
  ann["explain"] = s.diagnostic ? diagnostic_to_json(*s.diagnostic) : Json(nullptr);
  j["annotations"] = std::move(ann);
  return j;
}

// Chooses the next attack. With k >= EDN there is no forced win; the service
// then attacks the smallest empty vertex so the human still gets a game.
void launch_attack(Session& s) {
  if (!s.fallback_attacker) {
    try {
      AttackDecision d = s.attacker.next_attack(s.config);
      if (d.verdict == Verdict::AlreadyWon) {
        throw std::logic_error("attacker reports a win the service did not detect");
      }
      s.diagnostic = d.diagnostic;
      s.attacked = d.target;
      s.phase = Phase::AwaitingDefense;
      return;
    } catch (const ContractViolation&) {
      s.fallback_attacker = true;
    }
  }
  s.diagnostic.reset();
  Vertex target = 0;
  for (Vertex v = 0; v < s.analysis->rooted.size(); ++v) {
    if (!s.config.contains(v)) {
      target = v;
      break;
    }
  }
  s.attacker.set_reference_attack(target);
  s.attacked = target;
  s.phase = Phase::AwaitingDefense;
}

void finish(Session& s, EndReason reason) {
  s.trace.outcome = Outcome{Winner::Attacker, s.trace.turn_count(), reason};
  s.phase = Phase::Finished;
  s.attacked = kNoVertex;
}

}  // namespace

SessionStore::SessionStore(std::chrono::seconds idle_ttl)
    : idle_ttl_(idle_ttl), salt_(std::random_device{}()) {}

SessionStore::~SessionStore() = default;

std::shared_ptr<Session> SessionStore::find(const std::string& id) {
  std::shared_lock lock(mutex_);
  auto it = sessions_.find(id);
  if (it == sessions_.end()) throw ServiceError("not_found", "unknown session '" + id + "'", 404);
  return it->second;
}

Json SessionStore::create(const std::string& tree_text, int k) {
  Tree t;
  try {
    t = parse_edge_list(tree_text);
  } catch (const TreeError& e) {
    throw ServiceError("bad_tree", e.what(), 400);
  }
  if (k < 0 || k > t.size()) {
    throw ServiceError("bad_request", "k must lie in 0.." + std::to_string(t.size()), 400);
  }
  expire_idle();

  std::string id;
  {
    std::unique_lock lock(mutex_);
    std::ostringstream os;
    os << std::hex << (salt_ ^ (++next_id_ * 0x9E3779B97F4A7C15ULL));
    id = os.str();
  }
  auto s = std::make_shared<Session>(id, analyze(std::move(t)), k);
  s->trace.tree = s->analysis->tree();
  Json out = state_json(*s);
  std::unique_lock lock(mutex_);
  sessions_.emplace(id, std::move(s));
  return out;
}

Json SessionStore::get(const std::string& id) {
  auto s = find(id);
  std::shared_lock lock(s->mutex);
  s->last_access = Clock::now();
  return state_json(*s);
}

Json SessionStore::place(const std::string& id, const std::vector<Vertex>& vertices) {
  auto s = find(id);
  std::unique_lock lock(s->mutex);
  s->last_access = Clock::now();
  if (s->phase != Phase::AwaitingPlacement) throw ServiceError("wrong_phase", "guards are already placed", 409);
  if (static_cast<int>(vertices.size()) != s->k) {
    throw ServiceError("bad_request", "expected " + std::to_string(s->k) + " vertices, got " +
                                          std::to_string(vertices.size()), 400);
  }
  for (Vertex v : vertices) {
    if (!s->analysis->tree().contains(v)) throw ServiceError("bad_request", "vertex " + std::to_string(v) + " out of range", 400);
  }
  std::vector<Vertex> sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ServiceError("bad_request", "a vertex holds at most one guard", 400);
  }
  s->config = GuardConfig(std::move(sorted));
  s->trace.initial = s->config;
  launch_attack(*s);
  return state_json(*s);
}

Json SessionStore::defend(const std::string& id, const std::optional<DefenseMove>& move) {
  auto s = find(id);
  std::unique_lock lock(s->mutex);
  s->last_access = Clock::now();
  if (s->phase != Phase::AwaitingDefense) throw ServiceError("wrong_phase", "no attack is pending", 409);

  if (!move) {
    s->trace.turns.push_back({s->attacked, std::nullopt});
    finish(*s, EndReason::Forfeit);
    return state_json(*s);
  }
  DefenseCheck check = check_defense(s->analysis->tree(), s->config, *move, s->attacked);
  if (check.status == DefenseCheck::Status::Illegal) throw ServiceError("illegal_move", check.reason, 422);

  s->config = apply_move(s->config, *move);
  s->trace.turns.push_back({s->attacked, *move});
  if (!check.ok()) {
    finish(*s, EndReason::Uncovered);
    return state_json(*s);
  }
  launch_attack(*s);
  return state_json(*s);
}

Json SessionStore::trace(const std::string& id) {
  auto s = find(id);
  std::shared_lock lock(s->mutex);
  s->last_access = Clock::now();
  return trace_to_json(s->trace);
}

std::size_t SessionStore::expire_idle(Clock::time_point now) {
  std::unique_lock lock(mutex_);
  return std::erase_if(sessions_, [&](const auto& entry) { return now - entry.second->last_access.load() > idle_ttl_; });
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(mutex_);
  return sessions_.size();
}

}  // namespace edom

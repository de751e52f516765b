#include "edom/engine.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace edom {

DefenseCheck check_defense(const Tree& t, const GuardConfig& c, const DefenseMove& move, Vertex attacked) {
  auto illegal = [](std::string why) { return DefenseCheck{DefenseCheck::Status::Illegal, std::move(why)}; };
  std::unordered_set<Vertex> froms;
  std::unordered_set<Vertex> tos;
  for (const Move& m : move.moves) {
    const std::string pair = std::to_string(m.from) + ">" + std::to_string(m.to);
    if (!t.contains(m.from) || !t.contains(m.to)) return illegal(pair + ": vertex out of range");
    if (!c.contains(m.from)) return illegal(pair + ": no guard on " + std::to_string(m.from));
    if (!froms.insert(m.from).second) return illegal(pair + ": guard on " + std::to_string(m.from) + " moved twice");
    if (m.from != m.to && !t.adjacent(m.from, m.to)) {
      return illegal(pair + ": " + std::to_string(m.from) + " is not adjacent to " + std::to_string(m.to));
    }
    if (!tos.insert(m.to).second) return illegal(pair + ": two guards sent to " + std::to_string(m.to));
  }
  for (Vertex g : c) {
    if (!froms.contains(g) && tos.contains(g)) {
      return illegal("guard on " + std::to_string(g) + " stays but another guard moves onto it");
    }
  }
  const bool covered = tos.contains(attacked) || (c.contains(attacked) && !froms.contains(attacked));
  if (!covered) return {DefenseCheck::Status::NotCovered, "attacked vertex " + std::to_string(attacked) + " is not occupied"};
  return {};
}

bool validate_defense(const Tree& t, const GuardConfig& c, const DefenseMove& move, Vertex attacked) {
  return check_defense(t, c, move, attacked).ok();
}

GuardConfig apply_move(const GuardConfig& c, const DefenseMove& move) {
  std::unordered_set<Vertex> froms;
  for (const Move& m : move.moves) froms.insert(m.from);
  std::vector<Vertex> out;
  out.reserve(c.size());
  for (Vertex g : c) {
    if (!froms.contains(g)) out.push_back(g);
  }
  for (const Move& m : move.moves) out.push_back(m.to);
  return GuardConfig(std::move(out));
}

const char* end_reason_name(EndReason r) {
  switch (r) {
    case EndReason::Uncovered: return "uncovered";
    case EndReason::Forfeit: return "forfeit";
    case EndReason::IllegalMove: return "illegal";
    case EndReason::TurnLimit: return "turn_limit";
  }
  return "?";
}

Json trace_to_json(const GameTrace& trace) {
  Json j;
  j["tree"] = serialize_edge_list(trace.tree);
  j["c0"] = std::vector<Vertex>(trace.initial.begin(), trace.initial.end());
  Json turns = Json::array();
  for (const Turn& turn : trace.turns) {
    Json tj;
    tj["attack"] = turn.attack;
    if (turn.defense) {
      Json moves = Json::array();
      for (const Move& m : turn.defense->moves) moves.push_back({m.from, m.to});
      tj["defense"] = std::move(moves);
    } else {
      tj["defense"] = "forfeit";
    }
    turns.push_back(std::move(tj));
  }
  j["turns"] = std::move(turns);
  if (trace.outcome) {
    Json o;
    if (trace.outcome->winner == Winner::Attacker) {
      o["winner"] = "attacker";
      o["turn"] = trace.outcome->turn;
      o["reason"] = end_reason_name(trace.outcome->reason);
    } else {
      o["winner"] = "defender";
      o["turns"] = trace.outcome->turn;
    }
    j["outcome"] = std::move(o);
  } else {
    j["outcome"] = nullptr;
  }
  return j;
}

GameTrace trace_from_json(const Json& j) {
  GameTrace trace;
  trace.tree = parse_edge_list(j.at("tree").get<std::string>());
  trace.initial = GuardConfig(j.at("c0").get<std::vector<Vertex>>());
  for (const Json& tj : j.at("turns")) {
    Turn turn;
    turn.attack = tj.at("attack").get<Vertex>();
    const Json& d = tj.at("defense");
    if (!d.is_string()) {
      std::vector<Move> moves;
      for (const Json& m : d) moves.push_back({m.at(0).get<Vertex>(), m.at(1).get<Vertex>()});
      turn.defense = DefenseMove(std::move(moves));
    } else if (d.get<std::string>() != "forfeit") {
      throw std::invalid_argument("defense must be a move list or \"forfeit\"");
    }
    trace.turns.push_back(std::move(turn));
  }
  const Json& o = j.at("outcome");
  if (!o.is_null()) {
    if (o.at("winner") == "attacker") {
      EndReason reason = EndReason::Uncovered;
      const std::string r = o.at("reason").get<std::string>();
      if (r == "forfeit") reason = EndReason::Forfeit;
      else if (r == "illegal") reason = EndReason::IllegalMove;
      trace.outcome = Outcome{Winner::Attacker, o.at("turn").get<int>(), reason};
    } else {
      trace.outcome = Outcome{Winner::Defender, o.at("turns").get<int>(), EndReason::TurnLimit};
    }
  }
  return trace;
}

GuardConfig replay(const GameTrace& trace) {
  GuardConfig c = trace.initial;
  for (std::size_t i = 0; i < trace.turns.size(); ++i) {
    const Turn& turn = trace.turns[i];
    if (!turn.defense) {
      if (i + 1 != trace.turns.size()) throw std::runtime_error("forfeit before the last turn");
      break;
    }
    DefenseCheck check = check_defense(trace.tree, c, *turn.defense, turn.attack);
    if (check.status == DefenseCheck::Status::Illegal) {
      throw std::runtime_error("turn " + std::to_string(i + 1) + ": " + check.reason);
    }
    if (!check.ok() && i + 1 != trace.turns.size()) {
      throw std::runtime_error("turn " + std::to_string(i + 1) + " lost but the game continued");
    }
    c = apply_move(c, *turn.defense);
  }
  return c;
}

GameTrace play_game(const Tree& t, Attacker& attacker, Defender& defender, const GuardConfig& c0, int max_turns) {
  if (max_turns < 1) throw std::invalid_argument("max_turns must be at least 1");
  GameTrace trace;
  trace.tree = t;
  trace.initial = c0;
  GuardConfig c = c0;
  for (int turn = 1; turn <= max_turns; ++turn) {
    Vertex attacked = kNoVertex;
    std::optional<DefenseMove> reply;
    try {
      attacked = attacker.choose(c, trace);
    } catch (const std::exception& e) {
      throw GameAborted(std::string("attacker failed: ") + e.what(), trace);
    }
    if (!t.contains(attacked)) throw GameAborted("attacker chose invalid vertex " + std::to_string(attacked), trace);
    try {
      reply = defender.respond(c, attacked, trace);
    } catch (const std::exception& e) {
      trace.turns.push_back({attacked, std::nullopt});
      throw GameAborted(std::string("defender failed: ") + e.what(), trace);
    }
    if (!reply) {
      trace.turns.push_back({attacked, std::nullopt});
      trace.outcome = Outcome{Winner::Attacker, turn, EndReason::Forfeit};
      return trace;
    }
    DefenseCheck check = check_defense(t, c, *reply, attacked);
    if (check.status == DefenseCheck::Status::Illegal) {
      trace.turns.push_back({attacked, std::nullopt});
      trace.outcome = Outcome{Winner::Attacker, turn, EndReason::IllegalMove};
      return trace;
    }
    c = apply_move(c, *reply);
    trace.turns.push_back({attacked, std::move(reply)});
    if (!check.ok()) {
      trace.outcome = Outcome{Winner::Attacker, turn, EndReason::Uncovered};
      return trace;
    }
  }
  trace.outcome = Outcome{Winner::Defender, max_turns, EndReason::TurnLimit};
  return trace;
}

Vertex RandomAttacker::choose(const GuardConfig&, const GameTrace&) {
  std::uniform_int_distribution<Vertex> pick(0, n_ - 1);
  return pick(rng_);
}

GuardConfig RandomDefender::place(int k) {
  std::vector<Vertex> all(tree_.size());
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng_);
  all.resize(std::min<std::size_t>(all.size(), std::max(k, 0)));
  return GuardConfig(std::move(all));
}

std::optional<DefenseMove> RandomDefender::respond(const GuardConfig& current, Vertex attacked, const GameTrace&) {
  std::vector<Vertex> coverers;
  for (Vertex g : current) {
    if (g == attacked || tree_.adjacent(g, attacked)) coverers.push_back(g);
  }
  if (coverers.empty()) return std::nullopt;

  for (int attempt = 0; attempt < 8; ++attempt) {
    Vertex cover = coverers[std::uniform_int_distribution<std::size_t>(0, coverers.size() - 1)(rng_)];
    std::unordered_set<Vertex> taken{attacked};
    std::vector<Move> moves;
    if (cover != attacked) moves.push_back({cover, attacked});
    std::vector<Vertex> others;
    for (Vertex g : current) {
      if (g != cover) others.push_back(g);
    }
    std::shuffle(others.begin(), others.end(), rng_);
    bool stuck = false;
    for (Vertex g : others) {
      std::vector<Vertex> options;
      if (!taken.contains(g)) options.push_back(g);
      for (Vertex w : tree_.neighbors(g)) {
        if (!taken.contains(w)) options.push_back(w);
      }
      if (options.empty()) {
        stuck = true;
        break;
      }
      Vertex to = options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng_)];
      taken.insert(to);
      if (to != g) moves.push_back({g, to});
    }
    if (stuck) continue;
    DefenseMove m(std::move(moves));
    if (validate_defense(tree_, current, m, attacked)) return m;
  }
  if (current.contains(attacked)) return DefenseMove{};
  return DefenseMove{{coverers.front(), attacked}};
}

}  // namespace edom

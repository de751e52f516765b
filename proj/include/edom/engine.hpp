#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "edom/guards.hpp"
#include "edom/json.hpp"
#include "edom/tree.hpp"

namespace edom {

struct DefenseCheck {
  enum class Status { Ok, NotCovered, Illegal };
  Status status = Status::Ok;
  std::string reason;
  bool ok() const { return status == Status::Ok; }
};

// Full legality check of a defense, with the reason for rejection. Guards not
// named in the move stay put; swaps across an edge are allowed.
DefenseCheck check_defense(const Tree& t, const GuardConfig& c, const DefenseMove& move, Vertex attacked);

bool validate_defense(const Tree& t, const GuardConfig& c, const DefenseMove& move, Vertex attacked);

// Configuration after the move. The move must be legal (not checked).
GuardConfig apply_move(const GuardConfig& c, const DefenseMove& move);

enum class Winner { Attacker, Defender };
enum class EndReason { Uncovered, Forfeit, IllegalMove, TurnLimit };

const char* end_reason_name(EndReason r);

struct Turn {
  Vertex attack = kNoVertex;
  std::optional<DefenseMove> defense;  // nullopt: forfeit or rejected move
};

struct Outcome {
  Winner winner;
  int turn;  // attacker win: the losing turn; defender: turns survived
  EndReason reason;
};

struct GameTrace {
  Tree tree;
  GuardConfig initial;
  std::vector<Turn> turns;
  std::optional<Outcome> outcome;

  int turn_count() const { return static_cast<int>(turns.size()); }
  bool attacker_won() const { return outcome && outcome->winner == Winner::Attacker; }
};

Json trace_to_json(const GameTrace& trace);
GameTrace trace_from_json(const Json& j);

// Re-validates every recorded defense from the initial configuration and
// returns the final configuration. Throws std::runtime_error on a mismatch.
GuardConfig replay(const GameTrace& trace);

class Attacker {
 public:
  virtual ~Attacker() = default;
  virtual Vertex choose(const GuardConfig& current, const GameTrace& trace) = 0;
};

class Defender {
 public:
  virtual ~Defender() = default;
  virtual GuardConfig place(int k) = 0;
  // nullopt forfeits the game.
  virtual std::optional<DefenseMove> respond(const GuardConfig& current, Vertex attacked,
                                             const GameTrace& trace) = 0;
};

// Thrown when a strategy fails internally; carries the trace up to the
// failing turn.
class GameAborted : public std::runtime_error {
 public:
  GameAborted(const std::string& what, GameTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const GameTrace& trace() const { return trace_; }

 private:
  GameTrace trace_;
};

GameTrace play_game(const Tree& t, Attacker& attacker, Defender& defender, const GuardConfig& c0, int max_turns);

class RandomAttacker : public Attacker {
 public:
  RandomAttacker(int n, std::uint64_t seed) : n_(n), rng_(seed) {}
  Vertex choose(const GuardConfig& current, const GameTrace& trace) override;

 private:
  int n_;
  std::mt19937_64 rng_;
};

// Picks a random legal response that covers the attack whenever one exists
// within one step; forfeits otherwise.
class RandomDefender : public Defender {
 public:
  RandomDefender(Tree t, std::uint64_t seed) : tree_(std::move(t)), rng_(seed) {}
  GuardConfig place(int k) override;
  std::optional<DefenseMove> respond(const GuardConfig& current, Vertex attacked, const GameTrace& trace) override;

 private:
  Tree tree_;
  std::mt19937_64 rng_;
};

}  // namespace edom

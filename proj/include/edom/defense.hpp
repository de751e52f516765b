#pragma once

#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "edom/analysis.hpp"
#include "edom/engine.hpp"
#include "edom/guards.hpp"

namespace edom {

// Canonical defender bookkeeping: inner vertices are always guarded and each
// part has one extra guard, resting on the part's top except right after an
// attack on one of the part's leaves.
class DefenseState {
 public:
  explicit DefenseState(std::shared_ptr<const Analysis> analysis);

  const Analysis& analysis() const { return *analysis_; }
  Vertex extra(PartId p) const { return extra_[p]; }
  std::optional<PartId> last_attacked_part() const { return last_part_; }
  std::span<const Vertex> extras() const { return extra_; }

  // Inner vertices plus every extra guard.
  GuardConfig config() const;

  // Moves answering an attack on `attacked`, and updates the state.
  //  - in the attacked part the extra guard goes to `attacked` if it is a
  //    part leaf, otherwise back to the top;
  //  - the previously attacked part, if different, returns its extra guard
  //    to its top.
  // Each relocation is a one-turn shift of every guard along the tree path,
  // legal because the interior of such a path is guarded inner vertices.
  DefenseMove respond(Vertex attacked);

 private:
  void shift(PartId p, Vertex target, std::vector<Move>& out);

  std::shared_ptr<const Analysis> analysis_;
  std::vector<Vertex> extra_;
  std::optional<PartId> last_part_;
};

std::pair<GuardConfig, DefenseState> initial_canonical_config(std::shared_ptr<const Analysis> analysis);

DefenseMove canonical_response(DefenseState& state, Vertex attacked);

// Plays the canonical strategy while the board matches its bookkeeping.
// From any other configuration (e.g. fewer guards than needed) it covers the
// attack with an adjacent guard if it can and forfeits otherwise.
class CanonicalDefender : public Defender {
 public:
  explicit CanonicalDefender(std::shared_ptr<const Analysis> analysis);

  GuardConfig place(int k) override;
  std::optional<DefenseMove> respond(const GuardConfig& current, Vertex attacked, const GameTrace& trace) override;

  const DefenseState& state() const { return state_; }

 private:
  DefenseState state_;
};

}  // namespace edom

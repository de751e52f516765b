#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edom/analysis.hpp"
#include "edom/engine.hpp"
#include "edom/guards.hpp"

namespace edom {

enum class Verdict { Attack, AlreadyWon };

// Why the attacker picked its target. `x`, `d` are kNoVertex when unused.
struct AttackDiagnostic {
  Vertex a = kNoVertex;                // reference attack for canonical numbers
  std::vector<int> deficits;           // subtree deficit per vertex
  Vertex v = kNoVertex;                // deepest deficient vertex
  Vertex x = kNoVertex;                // where the canonical extra guard of part(v) sits
  Vertex d = kNoVertex;                // part-child of v whose subtree avoids x
  Vertex b = kNoVertex;                // chosen target
};

Json diagnostic_to_json(const AttackDiagnostic& diag);

struct AttackDecision {
  Vertex target = kNoVertex;
  Verdict verdict = Verdict::Attack;
  AttackDiagnostic diagnostic;
};

// Raised when no vertex is deficient, i.e. the defender holds at least EDN
// guards and no forced win exists.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Attacker that wins within diam(T) attacks against any defender holding
// fewer than EDN(T) guards. Each turn it locates the deepest vertex whose
// subtree holds fewer guards than the canonical defense would after the last
// attack, and attacks a part leaf below it that pulls the deficit one level
// deeper.
class AttackerState {
 public:
  explicit AttackerState(std::shared_ptr<const Analysis> analysis);

  const Analysis& analysis() const { return *analysis_; }
  std::optional<Vertex> reference_attack() const { return reference_; }
  void set_reference_attack(Vertex a) { reference_ = a; }

  // Guards on v in the canonical defense right after an attack on a (0 or 1).
  int canonical_number(Vertex v, Vertex a) const;

  // Canonical guard count of every subtree, for reference attack a.
  std::vector<int> canonical_subtree_numbers(Vertex a) const;

  // Subtree deficits g_T(v, C) - CN_T(v, a) for all v, in one pass.
  std::vector<int> subtree_deficits(const GuardConfig& c, Vertex a) const;
  int subtree_deficit(const GuardConfig& c, Vertex v, Vertex a) const;

  // Deepest vertex with negative subtree deficit (smallest id on ties).
  std::optional<Vertex> deepest_deficient(const std::vector<int>& deficits) const;

  // Picks the next attack for configuration c and records it as the new
  // reference attack. Throws ContractViolation if nothing is deficient.
  AttackDecision next_attack(const GuardConfig& c);

 private:
  std::shared_ptr<const Analysis> analysis_;
  std::optional<Vertex> reference_;
};

class TheoremAttacker : public Attacker {
 public:
  explicit TheoremAttacker(std::shared_ptr<const Analysis> analysis) : state_(std::move(analysis)) {}
  Vertex choose(const GuardConfig& current, const GameTrace& trace) override;

  const AttackerState& state() const { return state_; }
  const std::vector<AttackDiagnostic>& diagnostics() const { return diagnostics_; }

 private:
  AttackerState state_;
  std::vector<AttackDiagnostic> diagnostics_;
};

}  // namespace edom

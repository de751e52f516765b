#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "edom/engine.hpp"
#include "edom/guards.hpp"
#include "edom/tree.hpp"

namespace edom {

using Mask = std::uint32_t;

Mask to_mask(const GuardConfig& c);
GuardConfig from_mask(Mask m);

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleBudget {
  int max_vertices = 12;
  std::size_t max_configs = 5000;
};

// All k-subsets of a small tree with their one-turn successors, and the
// greatest fixed point of configurations from which every attack can be
// answered forever.
class SafeSet {
 public:
  static constexpr int kForever = std::numeric_limits<int>::max();

  const Tree& tree() const { return tree_; }
  int k() const { return k_; }
  std::size_t config_count() const { return configs_.size(); }
  Mask config(std::size_t i) const { return configs_[i]; }
  std::optional<std::size_t> index_of(Mask m) const;

  bool is_safe(Mask m) const;
  std::vector<Mask> safe_masks() const;
  bool empty() const;

  // Successors of configuration i (masks reachable in one turn).
  const std::vector<std::uint32_t>& successors(std::size_t i) const { return succ_[i]; }

  // Turns the defender survives from m under optimal play by both sides;
  // kForever for safe configurations. Computed lazily.
  int survival_rank(Mask m) const;

 private:
  friend SafeSet safe_configs(const Tree&, int, OracleBudget);
  void compute_ranks() const;

  Tree tree_;
  int k_ = 0;
  std::vector<Mask> configs_;
  std::vector<std::int32_t> index_;  // by mask, -1 if not a k-subset
  std::vector<std::vector<std::uint32_t>> succ_;
  std::vector<char> safe_;
  mutable std::vector<int> rank_;
};

SafeSet safe_configs(const Tree& t, int k, OracleBudget budget = {});

// Smallest k with a non-empty safe set.
int oracle_edn(const Tree& t, OracleBudget budget = {});

// Best response to an attack: a safe successor if any, otherwise the one
// surviving longest (smallest mask on ties); nullopt if the attack cannot be
// covered.
std::optional<DefenseMove> optimal_defense(const SafeSet& ss, const GuardConfig& c, Vertex attacked);

class OracleDefender : public Defender {
 public:
  explicit OracleDefender(const SafeSet& ss) : ss_(ss) {}
  GuardConfig place(int k) override;
  std::optional<DefenseMove> respond(const GuardConfig& current, Vertex attacked, const GameTrace& trace) override;

 private:
  const SafeSet& ss_;
};

// Cache format: "tree <hash> k <k>" then one safe mask per line (decimal).
std::uint64_t tree_hash(const Tree& t);
void write_safe_cache(std::ostream& out, const SafeSet& ss);
// Returns the cached safe masks if the header matches the tree and k.
std::optional<std::vector<Mask>> read_safe_cache(std::istream& in, const Tree& t, int k);

}  // namespace edom

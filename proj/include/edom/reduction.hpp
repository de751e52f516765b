#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "edom/tree.hpp"

namespace edom {

enum class StepKind { LeafPair, LeafBunch };

// One application of a reduction rule.
//  LeafPair:  x has a single child y which is a leaf; both are deleted.
//             `removed` is {x, y}.
//  LeafBunch: all children of x are leaves and x has a parent; the children
//             are deleted and x stays. `removed` is the children, ascending.
struct ReductionStep {
  StepKind kind;
  Vertex x;
  std::vector<Vertex> removed;

  // Edges contributed to the auxiliary graph whose components are the parts
  // of the neo-colonization.
  std::vector<Edge> h_edges() const;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

// What is left once no rule applies: a single vertex or a single edge
// (root first).
struct Terminal {
  std::vector<Vertex> vertices;
  bool is_edge() const { return vertices.size() == 2; }
  friend bool operator==(const Terminal&, const Terminal&) = default;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  Terminal terminal;

  int rho() const { return static_cast<int>(steps.size()); }
  int edn() const { return rho() + 1; }
};

// Working copy of a rooted tree that is reduced one step at a time, always at
// a deepest remaining leaf (smallest id among the deepest unless a tie seed
// shuffles the order). Linear overall: vertices are bucketed by depth and
// each bucket is swept once.
class Reducer {
 public:
  explicit Reducer(const RootedTree& rt, std::optional<std::uint64_t> tie_seed = std::nullopt);

  // Applies one rule, or returns nullopt once at most two vertices remain.
  std::optional<ReductionStep> step();

  int remaining() const { return remaining_; }
  bool alive(Vertex v) const { return alive_[v] != 0; }
  Terminal terminal() const;

 private:
  const RootedTree& rt_;
  std::vector<char> alive_;
  std::vector<std::int32_t> alive_children_;
  std::vector<std::vector<Vertex>> buckets_;
  int depth_cursor_;
  std::size_t bucket_cursor_ = 0;
  int remaining_;
};

// Eternal domination number by exhaustive reduction, with the full trace.
std::pair<int, ReductionTrace> compute_edn(const RootedTree& rt,
                                           std::optional<std::uint64_t> tie_seed = std::nullopt);
std::pair<int, ReductionTrace> compute_edn(const Tree& t);

// Line log: "P x y", "B x c1 .. ck", then "T K1 v" or "T K2 u v".
std::string format_trace(const ReductionTrace& trace);
ReductionTrace parse_trace(std::string_view text);

}  // namespace edom

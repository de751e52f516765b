#pragma once

#include <span>
#include <string>
#include <vector>

#include "edom/reduction.hpp"
#include "edom/tree.hpp"

namespace edom {

using PartId = std::int32_t;

// Partition of the vertices into connected parts, each with a top (its vertex
// closest to the root) and a weight: 1 for K1/K2 parts, otherwise the number
// of part-inner vertices plus one.
class NeoColonization {
 public:
  NeoColonization() = default;

  int part_count() const { return static_cast<int>(top_.size()); }
  PartId part_of(Vertex v) const { return part_of_[v]; }
  std::span<const Vertex> part(PartId p) const {
    return {members_.data() + offsets_[p], members_.data() + offsets_[p + 1]};
  }
  Vertex top(PartId p) const { return top_[p]; }
  int weight(PartId p) const { return weight_[p]; }
  PartId root_part() const { return root_part_; }
  int total_weight() const;

 private:
  friend NeoColonization make_neocolonization(const RootedTree&, std::vector<std::vector<Vertex>>);
  friend NeoColonization build_nice_neocol(const RootedTree&, const ReductionTrace&);

  std::vector<PartId> part_of_;
  std::vector<std::int32_t> offsets_{0};
  std::vector<Vertex> members_;
  std::vector<Vertex> top_;
  std::vector<int> weight_;
  PartId root_part_ = 0;
};

// Components of the auxiliary graph of the reduction trace, i.e. the nice
// neo-colonization. Throws std::logic_error if the result is not nice.
NeoColonization build_nice_neocol(const RootedTree& rt, const ReductionTrace& trace);

// Wraps an arbitrary partition (e.g. hand-built) without checking it; part ids
// follow the smallest member. Every vertex must appear in exactly one part.
NeoColonization make_neocolonization(const RootedTree& rt, std::vector<std::vector<Vertex>> parts);

enum class VertexClass : std::uint8_t { L, J, I };

char class_letter(VertexClass c);

// Part-relative classes: the top of a part is J, other vertices without
// children inside the part are L, the rest are I.
class VertexClasses {
 public:
  VertexClass operator[](Vertex v) const { return cls_[v]; }
  int part_children(Vertex v) const { return part_children_[v]; }
  int size() const { return static_cast<int>(cls_.size()); }

 private:
  friend VertexClasses classify_vertices(const NeoColonization&, const RootedTree&);
  std::vector<VertexClass> cls_;
  std::vector<std::int32_t> part_children_;
};

VertexClasses classify_vertices(const NeoColonization& nc, const RootedTree& rt);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks partition, connectivity, shrubbery, top-is-part-leaf, weights and
// that the total weight equals the reduction count.
ValidationReport validate_nice(const NeoColonization& nc, const RootedTree& rt);

// Per-part step accounting: a non-root part's weight equals the number of
// reduction steps whose edges landed in it (the root part: that plus one),
// and each non-root part receives exactly one LeafPair edge.
ValidationReport check_weight_accounting(const NeoColonization& nc, const ReductionTrace& trace);

}  // namespace edom

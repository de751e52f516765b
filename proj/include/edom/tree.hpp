#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace edom {

using Vertex = std::int32_t;
inline constexpr Vertex kNoVertex = -1;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Malformed tree input. `line` is 1-based, 0 when the error is not tied to a
// line of the wire format.
class TreeError : public std::runtime_error {
 public:
  explicit TreeError(const std::string& what, int line = 0);
  int line() const { return line_; }

 private:
  int line_;
};

// Undirected tree on vertices 0..n-1. Edges are stored normalized (u < v) and
// sorted; adjacency lists are sorted ascending.
class Tree {
 public:
  Tree() = default;

  // Validates the edge list: n-1 edges, endpoints in range, no loops, no
  // duplicates, connected. Throws TreeError otherwise.
  static Tree from_edges(int n, std::vector<Edge> edges);

  int size() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;
  bool contains(Vertex v) const { return v >= 0 && v < n_; }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend class TreeBuilder;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> offsets_{0};
  std::vector<Vertex> adj_;
};

// Wire format: first line n, then n-1 lines "u v".
Tree parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Tree& t);

// Number of edges on a longest path (double BFS sweep).
int diameter(const Tree& t);

// Breadth-first distances from `source`.
std::vector<int> bfs_distances(const Tree& t, Vertex source);

class RootedTree {
 public:
  RootedTree() = default;

  const Tree& tree() const { return tree_; }
  int size() const { return tree_.size(); }
  Vertex root() const { return root_; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {child_.data() + child_offsets_[v], child_.data() + child_offsets_[v + 1]};
  }
  int depth(Vertex v) const { return depth_[v]; }
  int max_depth() const { return max_depth_; }

  // Vertices in BFS order from the root (parents before children).
  std::span<const Vertex> order() const { return order_; }

  // True iff `v` lies in the subtree rooted at `top`.
  bool in_subtree(Vertex v, Vertex top) const {
    return enter_[top] <= enter_[v] && enter_[v] < leave_[top];
  }

  // Vertices of the unique path from u to w, both endpoints included.
  std::vector<Vertex> path(Vertex u, Vertex w) const;

 private:
  friend RootedTree root_at(Tree t, std::optional<Vertex> preferred);

  Tree tree_;
  Vertex root_ = 0;
  std::vector<Vertex> parent_;
  std::vector<std::int32_t> child_offsets_;
  std::vector<Vertex> child_;
  std::vector<int> depth_;
  std::vector<Vertex> order_;
  std::vector<std::int32_t> enter_;
  std::vector<std::int32_t> leave_;
  int max_depth_ = 0;
};

// Roots the tree at `preferred` (which must be a leaf) or at the smallest
// index leaf. A single vertex tree is rooted at 0.
RootedTree root_at(Tree t, std::optional<Vertex> preferred = std::nullopt);

// Smallest-index vertex of degree 1 (0 when n == 1).
Vertex default_root(const Tree& t);

}  // namespace edom

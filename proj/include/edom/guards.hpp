#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edom/tree.hpp"

namespace edom {

// Set of occupied vertices, kept sorted and duplicate free.
class GuardConfig {
 public:
  GuardConfig() = default;
  GuardConfig(std::initializer_list<Vertex> vs) : GuardConfig(std::vector<Vertex>(vs)) {}

  // Throws std::invalid_argument on duplicates or negative ids.
  explicit GuardConfig(std::vector<Vertex> vs);

  bool contains(Vertex v) const;
  int size() const { return static_cast<int>(v_.size()); }
  bool empty() const { return v_.empty(); }
  std::span<const Vertex> vertices() const { return v_; }
  auto begin() const { return v_.begin(); }
  auto end() const { return v_.end(); }

  // Occupancy indicator over n vertices.
  std::vector<char> mask(int n) const;

  friend bool operator==(const GuardConfig&, const GuardConfig&) = default;
  friend auto operator<=>(const GuardConfig&, const GuardConfig&) = default;

 private:
  std::vector<Vertex> v_;
};

std::string format_config(const GuardConfig& c);  // "0,1,2"
GuardConfig parse_config(std::string_view text);

struct Move {
  Vertex from;
  Vertex to;
  friend bool operator==(const Move&, const Move&) = default;
  friend auto operator<=>(const Move&, const Move&) = default;
};

// Simultaneous guard moves, one entry per moving guard, sorted.
struct DefenseMove {
  std::vector<Move> moves;

  DefenseMove() = default;
  DefenseMove(std::vector<Move> ms);
  DefenseMove(std::initializer_list<Move> ms) : DefenseMove(std::vector<Move>(ms)) {}

  friend bool operator==(const DefenseMove&, const DefenseMove&) = default;
};

// "2>0,0>3" with pairs sorted; empty move is "".
std::string format_move(const DefenseMove& m);
DefenseMove parse_move(std::string_view text);

}  // namespace edom

#include "edom/matching.hpp"

namespace edom {

namespace {

bool augment(int l, const std::vector<std::vector<int>>& adj, std::vector<int>& match_right,
             std::vector<char>& visited) {
  for (int r : adj[l]) {
    if (visited[r]) continue;
    visited[r] = 1;
    if (match_right[r] < 0 || augment(match_right[r], adj, match_right, visited)) {
      match_right[r] = l;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_count) {
  std::vector<int> match_right(right_count, -1);
  std::vector<char> visited(right_count);
  for (int l = 0; l < static_cast<int>(adj.size()); ++l) {
    std::fill(visited.begin(), visited.end(), 0);
    augment(l, adj, match_right, visited);
  }
  std::vector<int> match_left(adj.size(), -1);
  for (int r = 0; r < right_count; ++r) {
    if (match_right[r] >= 0) match_left[match_right[r]] = r;
  }
  return match_left;
}

std::optional<DefenseMove> transition_move(const Tree& t, const GuardConfig& from, const GuardConfig& to) {
  if (from.size() != to.size()) return std::nullopt;
  auto src = from.vertices();
  auto dst = to.vertices();
  std::vector<std::vector<int>> adj(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (src[i] == dst[j] || t.adjacent(src[i], dst[j])) adj[i].push_back(static_cast<int>(j));
    }
  }
  std::vector<int> match = max_bipartite_matching(adj, static_cast<int>(dst.size()));
  std::vector<Move> moves;
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (match[i] < 0) return std::nullopt;
    if (src[i] != dst[match[i]]) moves.push_back({src[i], dst[match[i]]});
  }
  return DefenseMove(std::move(moves));
}

bool reachable(const Tree& t, const GuardConfig& from, const GuardConfig& to) {
  return transition_move(t, from, to).has_value();
}

}  // namespace edom

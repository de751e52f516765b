#pragma once

// Shared fixtures and brute-force oracles for the test suites. Nothing here
// calls into the code paths it is used to check.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "edom/guards.hpp"
#include "edom/tree.hpp"

namespace edom::testing {

// Double star used throughout: 0 joins 1, 2, 3 and 1 carries leaves 4, 5.
inline Tree double_star() { return parse_edge_list("6\n0 1\n0 2\n0 3\n1 4\n1 5\n"); }

inline Tree path_of(int n) {
  std::string text = std::to_string(n) + "\n";
  for (int i = 1; i < n; ++i) text += std::to_string(i - 1) + " " + std::to_string(i) + "\n";
  return parse_edge_list(text);
}

// Longest shortest path over all vertex pairs.
inline int all_pairs_diameter(const Tree& t) {
  int best = 0;
  for (Vertex s = 0; s < t.size(); ++s) {
    std::vector<int> dist(t.size(), -1);
    std::vector<Vertex> queue{s};
    dist[s] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      for (Vertex w : t.neighbors(queue[h])) {
        if (dist[w] < 0) {
          dist[w] = dist[queue[h]] + 1;
          queue.push_back(w);
        }
      }
    }
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

// Tries every bijection from the guards of `from` onto the vertices of `to`.
inline bool brute_force_reachable(const Tree& t, const GuardConfig& from, const GuardConfig& to) {
  if (from.size() != to.size()) return false;
  std::vector<Vertex> src(from.begin(), from.end());
  std::vector<Vertex> dst(to.begin(), to.end());
  std::vector<int> perm(dst.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < src.size() && ok; ++i) {
      Vertex u = src[i];
      Vertex w = dst[perm[i]];
      bool step = u == w;
      for (Vertex x : t.neighbors(u)) step = step || x == w;
      ok = step;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace edom::testing

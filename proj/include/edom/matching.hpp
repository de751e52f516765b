#pragma once

#include <optional>
#include <vector>

#include "edom/guards.hpp"
#include "edom/tree.hpp"

namespace edom {

// Maximum bipartite matching by augmenting paths (Kuhn). `adj[l]` lists the
// right vertices of left vertex l. Returns, per left vertex, its matched
// right vertex or -1.
std::vector<int> max_bipartite_matching(const std::vector<std::vector<int>>& adj, int right_count);

// A one-turn move taking configuration `from` to `to`, if one exists: a
// perfect matching in the bipartite graph where a guard at u may go to w iff
// u == w or u ~ w. Guards that stay put are omitted from the move.
std::optional<DefenseMove> transition_move(const Tree& t, const GuardConfig& from, const GuardConfig& to);

bool reachable(const Tree& t, const GuardConfig& from, const GuardConfig& to);

}  // namespace edom

#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "edom/tree.hpp"

namespace edom {

// Random labeled tree: vertex i > 0 attaches to a uniform parent in [0, i).
Tree random_tree(int n, std::mt19937_64& rng);

// Isomorphism-invariant encoding of a free tree (AHU string rooted at the
// lexicographically smaller center encoding).
std::string canonical_form(const Tree& t);

// All pairwise non-isomorphic trees on exactly n vertices, ordered by
// canonical form. Labels follow a BFS of the canonical rooting.
std::vector<Tree> enumerate_trees(int n);

Tree path_tree(int n);
Tree star_tree(int leaves);

}  // namespace edom

#pragma once

#include <memory>
#include <optional>

#include "edom/json.hpp"
#include "edom/neocol.hpp"
#include "edom/reduction.hpp"
#include "edom/tree.hpp"

namespace edom {

// Everything the canonical defender and the attacker derive from a tree once:
// the rooting, the reduction trace, the nice neo-colonization and classes.
struct Analysis {
  RootedTree rooted;
  ReductionTrace trace;
  int edn = 0;
  NeoColonization neocol;
  VertexClasses classes;
  int diameter = 0;

  const Tree& tree() const { return rooted.tree(); }
};

// {"root", "edn", "parts": [{"id", "vertices", "top", "weight"}], "classes"}
Json neocol_to_json(const Analysis& a);

std::shared_ptr<const Analysis> analyze(Tree t, std::optional<Vertex> root = std::nullopt);

}  // namespace edom

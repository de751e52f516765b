#include "edom/attack.hpp"

#include <algorithm>

namespace edom {

namespace {

Json vertex_or_null(Vertex v) { return v == kNoVertex ? Json(nullptr) : Json(v); }

}  // namespace

Json diagnostic_to_json(const AttackDiagnostic& diag) {
  Json j;
  j["a"] = vertex_or_null(diag.a);
  j["deficits"] = diag.deficits;
  j["v"] = vertex_or_null(diag.v);
  j["x"] = vertex_or_null(diag.x);
  j["d"] = vertex_or_null(diag.d);
  j["b"] = vertex_or_null(diag.b);
  return j;
}

AttackerState::AttackerState(std::shared_ptr<const Analysis> analysis) : analysis_(std::move(analysis)) {}

int AttackerState::canonical_number(Vertex v, Vertex a) const {
  const Analysis& an = *analysis_;
  if (a == v) return 1;
  switch (an.classes[v]) {
    case VertexClass::I: return 1;
    case VertexClass::J:
      return an.classes[a] == VertexClass::L && an.neocol.part_of(a) == an.neocol.part_of(v) ? 0 : 1;
    case VertexClass::L: return 0;
  }
  return 0;
}

std::vector<int> AttackerState::canonical_subtree_numbers(Vertex a) const {
  const RootedTree& rt = analysis_->rooted;
  std::vector<int> cn(rt.size());
  auto order = rt.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    cn[v] += canonical_number(v, a);
    if (v != rt.root()) cn[rt.parent(v)] += cn[v];
  }
  return cn;
}

std::vector<int> AttackerState::subtree_deficits(const GuardConfig& c, Vertex a) const {
  const RootedTree& rt = analysis_->rooted;
  std::vector<int> dft(rt.size());
  for (Vertex g : c) {
    if (rt.tree().contains(g)) dft[g] = 1;
  }
  auto order = rt.order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    dft[v] -= canonical_number(v, a);
    if (v != rt.root()) dft[rt.parent(v)] += dft[v];
  }
  return dft;
}

int AttackerState::subtree_deficit(const GuardConfig& c, Vertex v, Vertex a) const {
  return subtree_deficits(c, a)[v];
}

std::optional<Vertex> AttackerState::deepest_deficient(const std::vector<int>& deficits) const {
  const RootedTree& rt = analysis_->rooted;
  std::optional<Vertex> best;
  for (Vertex v = 0; v < rt.size(); ++v) {
    if (deficits[v] < 0 && (!best || rt.depth(v) > rt.depth(*best))) best = v;
  }
  return best;
}

AttackDecision AttackerState::next_attack(const GuardConfig& c) {
  const Analysis& an = *analysis_;
  const RootedTree& rt = an.rooted;
  const NeoColonization& nc = an.neocol;
  AttackDecision out;

  if (!reference_) {
    if (c.empty()) {
      out.target = out.diagnostic.b = rt.root();
      reference_ = rt.root();
      return out;
    }
    reference_ = c.vertices().front();
  }
  const Vertex a = *reference_;
  AttackDiagnostic& diag = out.diagnostic;
  diag.a = a;
  diag.deficits = subtree_deficits(c, a);
  std::optional<Vertex> deepest = deepest_deficient(diag.deficits);
  if (!deepest) {
    throw ContractViolation("no deficient vertex: the defender holds at least EDN = " + std::to_string(an.edn) +
                            " guards");
  }
  const Vertex v = *deepest;
  diag.v = v;

  // Forced by depth maximality: v is empty, canonically guarded, and every
  // child subtree is exactly balanced.
  if (c.contains(v) || canonical_number(v, a) != 1) {
    throw std::logic_error("deepest deficient vertex " + std::to_string(v) + " is not an empty canonical vertex");
  }
  for (Vertex child : rt.children(v)) {
    if (diag.deficits[child] != 0) {
      throw std::logic_error("child " + std::to_string(child) + " of deepest deficient vertex has nonzero deficit");
    }
  }

  if (an.classes[v] == VertexClass::L) {
    // Only the attacked leaf is canonically guarded, so v == a is empty.
    out.target = v;
    out.verdict = Verdict::AlreadyWon;
    return out;
  }

  const PartId part = nc.part_of(v);
  diag.x = an.classes[a] == VertexClass::L && nc.part_of(a) == part ? a : nc.top(part);

  Vertex d = kNoVertex;
  for (Vertex child : rt.children(v)) {
    if (nc.part_of(child) == part && !rt.in_subtree(diag.x, child)) {
      d = child;
      break;
    }
  }

  Vertex b = kNoVertex;
  if (d == kNoVertex) {
    // Singleton root part: nothing of the part lies below v, so attack v
    // itself. Its guard can only come up from the child subtree, which then
    // falls one guard short.
    if (an.neocol.part(part).size() != 1) {
      throw std::logic_error("no part-child of " + std::to_string(v) + " avoids the extra guard");
    }
    b = v;
  } else {
    std::vector<Vertex> stack{d};
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      if (an.classes[u] == VertexClass::L && (b == kNoVertex || u < b)) b = u;
      for (Vertex w : rt.children(u)) {
        if (nc.part_of(w) == part) stack.push_back(w);
      }
    }
    if (b == kNoVertex) throw std::logic_error("subtree of " + std::to_string(d) + " holds no part leaf");
  }

  diag.d = d;
  diag.b = b;
  out.target = b;
  reference_ = b;
  return out;
}

Vertex TheoremAttacker::choose(const GuardConfig& current, const GameTrace&) {
  AttackDecision decision = state_.next_attack(current);
  diagnostics_.push_back(decision.diagnostic);
  return decision.target;
}

}  // namespace edom

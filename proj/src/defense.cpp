#include "edom/defense.hpp"

#include <algorithm>
#include <stdexcept>

namespace edom {

DefenseState::DefenseState(std::shared_ptr<const Analysis> analysis) : analysis_(std::move(analysis)) {
  const NeoColonization& nc = analysis_->neocol;
  extra_.resize(nc.part_count());
  for (PartId p = 0; p < nc.part_count(); ++p) extra_[p] = nc.top(p);
}

GuardConfig DefenseState::config() const {
  const Analysis& a = *analysis_;
  std::vector<Vertex> occupied(extra_.begin(), extra_.end());
  for (Vertex v = 0; v < a.rooted.size(); ++v) {
    if (a.classes[v] == VertexClass::I) occupied.push_back(v);
  }
  return GuardConfig(std::move(occupied));
}

void DefenseState::shift(PartId p, Vertex target, std::vector<Move>& out) {
  const Vertex from = extra_[p];
  if (from == target) return;
  const Analysis& a = *analysis_;
  std::vector<Vertex> path = a.rooted.path(from, target);
  for (std::size_t i = 1; i + 1 < path.size(); ++i) {
    if (a.classes[path[i]] != VertexClass::I || a.neocol.part_of(path[i]) != p) {
      throw std::logic_error("canonical shift from " + std::to_string(from) + " to " + std::to_string(target) +
                             " crosses unguarded vertex " + std::to_string(path[i]));
    }
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i) out.push_back({path[i], path[i + 1]});
  extra_[p] = target;
}

DefenseMove DefenseState::respond(Vertex attacked) {
  const Analysis& a = *analysis_;
  if (!a.rooted.tree().contains(attacked)) throw std::out_of_range("attacked vertex out of range");
  const NeoColonization& nc = a.neocol;
  const PartId p = nc.part_of(attacked);

  std::vector<Move> moves;
  const Vertex target = a.classes[attacked] == VertexClass::L ? attacked : nc.top(p);
  shift(p, target, moves);
  if (last_part_ && *last_part_ != p) shift(*last_part_, nc.top(*last_part_), moves);
  last_part_ = p;
  return DefenseMove(std::move(moves));
}

std::pair<GuardConfig, DefenseState> initial_canonical_config(std::shared_ptr<const Analysis> analysis) {
  DefenseState state(std::move(analysis));
  GuardConfig c = state.config();
  return {std::move(c), std::move(state)};
}

DefenseMove canonical_response(DefenseState& state, Vertex attacked) { return state.respond(attacked); }

CanonicalDefender::CanonicalDefender(std::shared_ptr<const Analysis> analysis) : state_(std::move(analysis)) {}

GuardConfig CanonicalDefender::place(int k) {
  GuardConfig canonical = state_.config();
  std::vector<Vertex> vs(canonical.begin(), canonical.end());
  if (k <= static_cast<int>(vs.size())) {
    vs.resize(std::max(k, 0));
    return GuardConfig(std::move(vs));
  }
  for (Vertex v = 0; v < state_.analysis().rooted.size() && static_cast<int>(vs.size()) < k; ++v) {
    if (!canonical.contains(v)) vs.push_back(v);
  }
  return GuardConfig(std::move(vs));
}

std::optional<DefenseMove> CanonicalDefender::respond(const GuardConfig& current, Vertex attacked, const GameTrace&) {
  if (current == state_.config()) return state_.respond(attacked);
  if (current.contains(attacked)) return DefenseMove{};
  const Tree& t = state_.analysis().tree();
  for (Vertex w : t.neighbors(attacked)) {
    if (current.contains(w)) return DefenseMove{{w, attacked}};
  }
  return std::nullopt;
}

}  // namespace edom

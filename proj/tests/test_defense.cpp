#include <doctest.h>

#include <random>
#include <set>

#include "edom/defense.hpp"
#include "edom/generate.hpp"
#include "edom/oracle.hpp"
#include "support.hpp"

using namespace edom;
using namespace edom::testing;

namespace {

// Occupancy rules of the canonical strategy for the state's configuration.
bool occupancy_holds(const DefenseState& s) {
  const Analysis& a = s.analysis();
  GuardConfig c = s.config();
  for (Vertex v = 0; v < a.tree().size(); ++v) {
    const PartId p = a.neocol.part_of(v);
    const bool occupied = c.contains(v);
    switch (a.classes[v]) {
      case VertexClass::I:
        if (!occupied) return false;
        break;
      case VertexClass::J:
      case VertexClass::L:
        if (occupied != (s.extra(p) == v)) return false;
        break;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("initial canonical configurations") {
  CHECK(initial_canonical_config(analyze(path_of(2))).first == GuardConfig{0});
  CHECK(initial_canonical_config(analyze(double_star())).first == GuardConfig{0, 1, 2});
  CHECK(initial_canonical_config(analyze(path_of(4))).first == GuardConfig{0, 2});
}

TEST_CASE("canonical responses on DS") {
  auto [c, state] = initial_canonical_config(analyze(double_star()));
  DefenseMove m1 = canonical_response(state, 3);
  CHECK(m1 == DefenseMove{{2, 0}, {0, 3}});
  CHECK(validate_defense(double_star(), c, m1, 3));
  c = apply_move(c, m1);
  CHECK(c == GuardConfig{0, 1, 3});
  CHECK(state.config() == c);

  DefenseState again = state;
  DefenseMove m2 = canonical_response(again, 4);
  CHECK(m2 == DefenseMove{{3, 0}, {0, 1}, {1, 4}});
  CHECK(apply_move(c, m2) == GuardConfig{0, 1, 4});

  DefenseMove m3 = canonical_response(state, 0);
  CHECK(m3 == DefenseMove{{3, 0}, {0, 2}});
  CHECK(apply_move(c, m3) == GuardConfig{0, 1, 2});
  CHECK(validate_defense(double_star(), c, m3, 0));
}

TEST_CASE("canonical defense survives random attack sequences") {
  std::mt19937_64 rng(1234);
  for (int i = 0; i < 100; ++i) {
    Tree t = random_tree(1 + static_cast<int>(rng() % 40), rng);
    auto analysis = analyze(t);
    for (int seq = 0; seq < 5; ++seq) {
      auto [c, state] = initial_canonical_config(analysis);
      CHECK(c.size() == analysis->edn);
      for (int turn = 0; turn < 50; ++turn) {
        const Vertex attacked = static_cast<Vertex>(rng() % t.size());
        const auto before = state.last_attacked_part();
        DefenseMove m = canonical_response(state, attacked);
        REQUIRE_MESSAGE(validate_defense(t, c, m, attacked), serialize_edge_list(t));
        std::set<PartId> moved;
        for (const Move& mv : m.moves) moved.insert(analysis->neocol.part_of(mv.from));
        const PartId hit = analysis->neocol.part_of(attacked);
        for (PartId p : moved) CHECK((p == hit || (before && p == *before)));
        c = apply_move(c, m);
        CHECK(c == state.config());
        CHECK(c.contains(attacked));
        CHECK(occupancy_holds(state));
      }
    }
  }
}

TEST_CASE("canonical configurations are safe on small trees") {
  for (int n = 1; n <= 7; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      auto analysis = analyze(t);
      SafeSet ss = safe_configs(t, analysis->edn);
      auto [c0, s0] = initial_canonical_config(analysis);
      // Explore states by (extra vector, last part); the config alone does
      // not determine the next move.
      std::set<std::pair<std::vector<Vertex>, int>> seen;
      std::vector<DefenseState> stack{s0};
      while (!stack.empty()) {
        DefenseState s = stack.back();
        stack.pop_back();
        std::vector<Vertex> extras(s.extras().begin(), s.extras().end());
        if (!seen.insert({extras, s.last_attacked_part().value_or(-1)}).second) continue;
        CHECK(ss.is_safe(to_mask(s.config())));
        for (Vertex a = 0; a < n; ++a) {
          DefenseState next = s;
          canonical_response(next, a);
          stack.push_back(next);
        }
      }
    }
  }
}

TEST_CASE("CanonicalDefender places and keeps the state in sync") {
  CanonicalDefender d(analyze(double_star()));
  CHECK(d.place(3) == GuardConfig{0, 1, 2});
  CHECK(d.place(2).size() == 2);
  CHECK(d.place(4).size() == 4);
}

#include <doctest.h>

#include <random>

#include "edom/generate.hpp"
#include "edom/neocol.hpp"
#include "support.hpp"

using namespace edom;
using namespace edom::testing;

namespace {

NeoColonization nice_of(const RootedTree& rt) { return build_nice_neocol(rt, compute_edn(rt).second); }

std::vector<Vertex> members(const NeoColonization& nc, PartId p) {
  auto s = nc.part(p);
  return {s.begin(), s.end()};
}

}  // namespace

TEST_CASE("DS is a single part of weight 3") {
  RootedTree rt = root_at(double_star(), 2);
  NeoColonization nc = nice_of(rt);
  REQUIRE(nc.part_count() == 1);
  CHECK(members(nc, 0) == std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  CHECK(nc.top(0) == 2);
  CHECK(nc.weight(0) == 3);
  CHECK(nc.total_weight() == 3);

  VertexClasses cls = classify_vertices(nc, rt);
  const std::string expected = "IIJLLL";
  for (Vertex v = 0; v < 6; ++v) CHECK(class_letter(cls[v]) == expected[v]);
  CHECK(validate_nice(nc, rt).ok());
}

TEST_CASE("P4 splits into two edges") {
  RootedTree rt = root_at(path_of(4));
  NeoColonization nc = nice_of(rt);
  REQUIRE(nc.part_count() == 2);
  CHECK(members(nc, nc.part_of(0)) == std::vector<Vertex>{0, 1});
  CHECK(members(nc, nc.part_of(2)) == std::vector<Vertex>{2, 3});
  CHECK(nc.top(nc.part_of(2)) == 2);
  CHECK(nc.root_part() == nc.part_of(0));
  CHECK(nc.total_weight() == 2);
  VertexClasses cls = classify_vertices(nc, rt);
  CHECK(cls[0] == VertexClass::J);
  CHECK(cls[1] == VertexClass::L);
  CHECK(cls[2] == VertexClass::J);
  CHECK(cls[3] == VertexClass::L);
}

TEST_CASE("a singleton root part is classified J") {
  RootedTree rt = root_at(path_of(3));
  NeoColonization nc = nice_of(rt);
  REQUIRE(nc.part_count() == 2);
  CHECK(members(nc, nc.root_part()) == std::vector<Vertex>{0});
  CHECK(classify_vertices(nc, rt)[0] == VertexClass::J);
  CHECK(validate_nice(nc, rt).ok());

  RootedTree single = root_at(Tree::from_edges(1, {}));
  NeoColonization one = nice_of(single);
  CHECK(one.part_count() == 1);
  CHECK(one.weight(0) == 1);
  CHECK(classify_vertices(one, single)[0] == VertexClass::J);
}

TEST_CASE("validate_nice rejects hand-built partitions") {
  RootedTree p4 = root_at(path_of(4));
  ValidationReport bad_shape = validate_nice(make_neocolonization(p4, {{0}, {1, 2, 3}}), p4);
  CHECK_FALSE(bad_shape.ok());

  RootedTree ds = root_at(double_star(), 2);
  NeoColonization split = make_neocolonization(ds, {{2, 0, 3}, {1, 4, 5}});
  CHECK(split.total_weight() == 4);
  CHECK_FALSE(validate_nice(split, ds).ok());

  CHECK_THROWS(make_neocolonization(p4, {{0, 1}, {1, 2, 3}}));
  CHECK_THROWS(make_neocolonization(p4, {{0, 1}, {2}}));
}

TEST_CASE("nice neo-colonizations of random trees validate and account for every step") {
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    Tree t = random_tree(4 + static_cast<int>(rng() % 57), rng);
    RootedTree rt = root_at(t);
    auto [edn, trace] = compute_edn(rt);
    NeoColonization nc = build_nice_neocol(rt, trace);
    CHECK(nc.total_weight() == edn);
    ValidationReport nice = validate_nice(nc, rt);
    ValidationReport acct = check_weight_accounting(nc, trace);
    CHECK_MESSAGE(nice.ok(), serialize_edge_list(t));
    CHECK_MESSAGE(acct.ok(), serialize_edge_list(t));
    VertexClasses cls = classify_vertices(nc, rt);
    for (PartId p = 0; p < nc.part_count(); ++p) CHECK(cls[nc.top(p)] == VertexClass::J);
  }
}

TEST_CASE("every small tree has a valid nice neo-colonization") {
  for (int n = 1; n <= 9; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      RootedTree rt = root_at(t);
      auto [edn, trace] = compute_edn(rt);
      NeoColonization nc = build_nice_neocol(rt, trace);
      CHECK(validate_nice(nc, rt).ok());
      CHECK(check_weight_accounting(nc, trace).ok());
    }
  }
}

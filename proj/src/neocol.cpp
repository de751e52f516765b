#include "edom/neocol.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace edom {

namespace {

std::vector<int> part_degrees(const NeoColonization& nc, const Tree& t) {
  std::vector<int> deg(t.size(), 0);
  for (const Edge& e : t.edges()) {
    if (nc.part_of(e.u) == nc.part_of(e.v)) {
      ++deg[e.u];
      ++deg[e.v];
    }
  }
  return deg;
}

int formula_weight(std::span<const Vertex> members, const std::vector<int>& deg) {
  if (members.size() == 1) return 1;
  if (members.size() == 2 && deg[members[0]] == 1 && deg[members[1]] == 1) return 1;
  int inner = 0;
  for (Vertex v : members) inner += deg[v] >= 2;
  return inner + 1;
}

ValidationReport structural_violations(const NeoColonization& nc, const RootedTree& rt) {
  ValidationReport report;
  auto fail = [&](std::string s) { report.violations.push_back(std::move(s)); };
  const Tree& t = rt.tree();
  std::vector<int> seen(t.size(), 0);
  for (PartId p = 0; p < nc.part_count(); ++p) {
    for (Vertex v : nc.part(p)) {
      if (!t.contains(v)) {
        fail("part " + std::to_string(p) + " contains invalid vertex " + std::to_string(v));
        continue;
      }
      ++seen[v];
    }
  }
  for (Vertex v = 0; v < t.size(); ++v) {
    if (seen[v] != 1) fail("vertex " + std::to_string(v) + " lies in " + std::to_string(seen[v]) + " parts");
  }
  if (!report.ok()) return report;

  std::vector<int> deg = part_degrees(nc, t);
  std::vector<int> internal_edges(nc.part_count(), 0);
  for (const Edge& e : t.edges()) {
    if (nc.part_of(e.u) == nc.part_of(e.v)) ++internal_edges[nc.part_of(e.u)];
  }
  for (PartId p = 0; p < nc.part_count(); ++p) {
    auto members = nc.part(p);
    const std::string name = "part " + std::to_string(p);
    // An induced subforest is connected iff it has |V|-1 edges.
    if (internal_edges[p] != static_cast<int>(members.size()) - 1) {
      fail(name + " is not connected");
      continue;
    }
    for (Vertex v : members) {
      if (deg[v] == 2) fail(name + " is not a shrubbery: vertex " + std::to_string(v) + " has part-degree 2");
    }
    Vertex top = nc.top(p);
    for (Vertex v : members) {
      if (rt.depth(v) < rt.depth(top)) fail(name + ": top " + std::to_string(top) + " is not closest to the root");
    }
    if (deg[top] > 1) fail(name + ": top " + std::to_string(top) + " is not a leaf of the part");
    if (nc.weight(p) != formula_weight(members, deg)) {
      fail(name + ": weight " + std::to_string(nc.weight(p)) + " != " +
           std::to_string(formula_weight(members, deg)));
    }
  }
  if (nc.part_of(rt.root()) != nc.root_part()) fail("root part id does not contain the root");
  return report;
}

}  // namespace

int NeoColonization::total_weight() const { return std::accumulate(weight_.begin(), weight_.end(), 0); }

char class_letter(VertexClass c) {
  switch (c) {
    case VertexClass::L: return 'L';
    case VertexClass::J: return 'J';
    case VertexClass::I: return 'I';
  }
  return '?';
}

NeoColonization make_neocolonization(const RootedTree& rt, std::vector<std::vector<Vertex>> parts) {
  const int n = rt.size();
  NeoColonization nc;
  nc.part_of_.assign(n, -1);
  for (auto& part : parts) std::sort(part.begin(), part.end());
  std::erase_if(parts, [](const auto& p) { return p.empty(); });
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });

  for (PartId p = 0; p < static_cast<PartId>(parts.size()); ++p) {
    for (Vertex v : parts[p]) {
      if (v < 0 || v >= n) throw std::invalid_argument("partition vertex " + std::to_string(v) + " out of range");
      if (nc.part_of_[v] != -1) throw std::invalid_argument("vertex " + std::to_string(v) + " in two parts");
      nc.part_of_[v] = p;
      nc.members_.push_back(v);
    }
    nc.offsets_.push_back(static_cast<std::int32_t>(nc.members_.size()));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (nc.part_of_[v] == -1) throw std::invalid_argument("vertex " + std::to_string(v) + " in no part");
  }

  nc.top_.assign(parts.size(), kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    Vertex& top = nc.top_[nc.part_of_[v]];
    if (top == kNoVertex || rt.depth(v) < rt.depth(top)) top = v;
  }
  std::vector<int> deg = part_degrees(nc, rt.tree());
  nc.weight_.resize(parts.size());
  for (PartId p = 0; p < nc.part_count(); ++p) nc.weight_[p] = formula_weight(nc.part(p), deg);
  nc.root_part_ = nc.part_of_[rt.root()];
  return nc;
}

NeoColonization build_nice_neocol(const RootedTree& rt, const ReductionTrace& trace) {
  const int n = rt.size();
  std::vector<Vertex> up(n);
  std::iota(up.begin(), up.end(), 0);
  auto find = [&](Vertex x) {
    while (up[x] != x) x = up[x] = up[up[x]];
    return x;
  };
  auto unite = [&](Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a != b) up[std::max(a, b)] = std::min(a, b);
  };
  for (const ReductionStep& s : trace.steps) {
    for (const Edge& e : s.h_edges()) unite(e.u, e.v);
  }
  if (trace.terminal.is_edge()) unite(trace.terminal.vertices[0], trace.terminal.vertices[1]);

  // Union by smaller id makes each representative the smallest member, so
  // numbering representatives in ascending order yields the part ids.
  NeoColonization nc;
  nc.part_of_.assign(n, -1);
  PartId parts = 0;
  for (Vertex v = 0; v < n; ++v) {
    Vertex r = find(v);
    if (r == v) nc.part_of_[v] = parts++;
    else nc.part_of_[v] = nc.part_of_[r];
  }
  nc.offsets_.assign(parts + 1, 0);
  for (Vertex v = 0; v < n; ++v) ++nc.offsets_[nc.part_of_[v] + 1];
  for (PartId p = 0; p < parts; ++p) nc.offsets_[p + 1] += nc.offsets_[p];
  nc.members_.resize(n);
  std::vector<std::int32_t> fill(nc.offsets_.begin(), nc.offsets_.end() - 1);
  for (Vertex v = 0; v < n; ++v) nc.members_[fill[nc.part_of_[v]]++] = v;

  nc.top_.assign(parts, kNoVertex);
  for (Vertex v = 0; v < n; ++v) {
    Vertex& top = nc.top_[nc.part_of_[v]];
    if (top == kNoVertex || rt.depth(v) < rt.depth(top)) top = v;
  }
  std::vector<int> deg = part_degrees(nc, rt.tree());
  nc.weight_.resize(parts);
  for (PartId p = 0; p < parts; ++p) nc.weight_[p] = formula_weight(nc.part(p), deg);
  nc.root_part_ = nc.part_of_[rt.root()];

  ValidationReport report = structural_violations(nc, rt);
  if (nc.total_weight() != trace.edn()) {
    report.violations.push_back("total weight " + std::to_string(nc.total_weight()) + " != " +
                                std::to_string(trace.edn()));
  }
  if (!report.ok()) throw std::logic_error("neo-colonization is not nice: " + report.violations.front());
  return nc;
}

VertexClasses classify_vertices(const NeoColonization& nc, const RootedTree& rt) {
  VertexClasses out;
  const int n = rt.size();
  out.cls_.resize(n);
  out.part_children_.assign(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex c : rt.children(v)) out.part_children_[v] += nc.part_of(c) == nc.part_of(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (nc.top(nc.part_of(v)) == v) out.cls_[v] = VertexClass::J;
    else if (out.part_children_[v] == 0) out.cls_[v] = VertexClass::L;
    else out.cls_[v] = VertexClass::I;
  }
  return out;
}

ValidationReport validate_nice(const NeoColonization& nc, const RootedTree& rt) {
  ValidationReport report = structural_violations(nc, rt);
  const int edn = compute_edn(rt).first;
  if (nc.total_weight() != edn) {
    report.violations.push_back("total weight " + std::to_string(nc.total_weight()) + " != EDN " +
                                std::to_string(edn));
  }
  return report;
}

ValidationReport check_weight_accounting(const NeoColonization& nc, const ReductionTrace& trace) {
  ValidationReport report;
  std::vector<int> steps(nc.part_count(), 0);
  std::vector<int> pairs(nc.part_count(), 0);
  for (const ReductionStep& s : trace.steps) {
    PartId p = nc.part_of(s.h_edges().front().u);
    for (const Edge& e : s.h_edges()) {
      if (nc.part_of(e.u) != p || nc.part_of(e.v) != p) {
        report.violations.push_back("step at " + std::to_string(s.x) + " spans two parts");
      }
    }
    ++steps[p];
    pairs[p] += s.kind == StepKind::LeafPair;
  }
  for (PartId p = 0; p < nc.part_count(); ++p) {
    const bool is_root = p == nc.root_part();
    const int expected = steps[p] + (is_root ? 1 : 0);
    if (nc.weight(p) != expected) {
      report.violations.push_back("part " + std::to_string(p) + ": weight " + std::to_string(nc.weight(p)) +
                                  " but " + std::to_string(expected) + " from step accounting");
    }
    if (pairs[p] != (is_root ? 0 : 1)) {
      report.violations.push_back("part " + std::to_string(p) + " received " + std::to_string(pairs[p]) +
                                  " LeafPair edges");
    }
  }
  return report;
}

}  // namespace edom

#include "edom/generate.hpp"

#include <algorithm>
#include <map>

namespace edom {

Tree random_tree(int n, std::mt19937_64& rng) {
  std::vector<Edge> edges;
  edges.reserve(n > 0 ? n - 1 : 0);
  for (Vertex i = 1; i < n; ++i) {
    std::uniform_int_distribution<Vertex> pick(0, i - 1);
    edges.push_back({pick(rng), i});
  }
  return Tree::from_edges(n, std::move(edges));
}

Tree path_tree(int n) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < n; ++i) edges.push_back({i - 1, i});
  return Tree::from_edges(n, std::move(edges));
}

Tree star_tree(int leaves) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i <= leaves; ++i) edges.push_back({0, i});
  return Tree::from_edges(leaves + 1, std::move(edges));
}

namespace {

std::vector<Vertex> centers(const Tree& t) {
  const int n = t.size();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<int> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer) {
      for (Vertex w : t.neighbors(v)) {
        if (--deg[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// AHU encoding of the tree rooted at `root`; also returns the canonical
// child order per vertex so a relabeling can follow it.
struct RootedCode {
  std::string code;
  std::vector<std::vector<Vertex>> ordered_children;
};

RootedCode encode_rooted(const Tree& t, Vertex root) {
  // Centers are usually inner vertices, which root_at does not accept.
  const int n = t.size();
  std::vector<Vertex> parent(n, kNoVertex);
  std::vector<Vertex> order{root};
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : t.neighbors(order[head])) {
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = order[head];
        order.push_back(w);
      }
    }
  }
  std::vector<std::string> code(n);
  RootedCode out;
  out.ordered_children.assign(n, {});
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex v = *it;
    std::vector<Vertex> kids;
    for (Vertex w : t.neighbors(v)) {
      if (w != parent[v]) kids.push_back(w);
    }
    std::sort(kids.begin(), kids.end(), [&](Vertex a, Vertex b) { return code[a] < code[b]; });
    std::string s = "(";
    for (Vertex k : kids) s += code[k];
    s += ")";
    code[v] = std::move(s);
    out.ordered_children[v] = std::move(kids);
  }
  out.code = code[root];
  return out;
}

}  // namespace

std::string canonical_form(const Tree& t) {
  std::string best;
  for (Vertex c : centers(t)) {
    std::string code = encode_rooted(t, c).code;
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

namespace {

Tree relabel_canonically(const Tree& t) {
  Vertex best_center = kNoVertex;
  RootedCode best;
  for (Vertex c : centers(t)) {
    RootedCode rc = encode_rooted(t, c);
    if (best_center == kNoVertex || rc.code < best.code) {
      best_center = c;
      best = std::move(rc);
    }
  }
  const int n = t.size();
  std::vector<Vertex> label(n, kNoVertex);
  std::vector<Vertex> order{best_center};
  label[best_center] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (Vertex w : best.ordered_children[order[head]]) {
      label[w] = static_cast<Vertex>(order.size());
      order.push_back(w);
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : t.edges()) edges.push_back({label[e.u], label[e.v]});
  return Tree::from_edges(n, std::move(edges));
}

}  // namespace

std::vector<Tree> enumerate_trees(int n) {
  if (n < 1) return {};
  std::map<std::string, Tree> level;
  Tree single = Tree::from_edges(1, {});
  level.emplace(canonical_form(single), single);
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Tree> next;
    for (const auto& [code, t] : level) {
      for (Vertex v = 0; v < t.size(); ++v) {
        std::vector<Edge> edges(t.edges().begin(), t.edges().end());
        edges.push_back({v, static_cast<Vertex>(t.size())});
        Tree grown = Tree::from_edges(size, std::move(edges));
        std::string key = canonical_form(grown);
        if (!next.contains(key)) next.emplace(std::move(key), relabel_canonically(grown));
      }
    }
    level = std::move(next);
  }
  std::vector<Tree> out;
  out.reserve(level.size());
  for (auto& [code, t] : level) out.push_back(std::move(t));
  return out;
}

}  // namespace edom

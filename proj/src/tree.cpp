#include "edom/tree.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace edom {

namespace {

std::string with_line(const std::string& what, int line) {
  return line > 0 ? "line " + std::to_string(line) + ": " + what : what;
}

struct DisjointSets {
  std::vector<int> up;
  explicit DisjointSets(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int x) {
    while (up[x] != x) {
      up[x] = up[up[x]];
      x = up[x];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    up[a] = b;
    return true;
  }
};

bool parse_int(std::string_view s, long long& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

TreeError::TreeError(const std::string& what, int line)
    : std::runtime_error(with_line(what, line)), line_(line) {}

// line_of(i) gives the wire-format line of edge i, or 0.
class TreeBuilder {
 public:
  template <class LineOf>
  static Tree build(int n, std::vector<Edge> edges, LineOf line_of) {
    if (n < 1) throw TreeError("tree must have at least one vertex");
    if (static_cast<long long>(edges.size()) != n - 1) {
      throw TreeError("expected " + std::to_string(n - 1) + " edges, got " +
                      std::to_string(edges.size()));
    }
    DisjointSets sets(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      Edge e = edges[i];
      int line = line_of(i);
      if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
        throw TreeError("vertex out of range 0.." + std::to_string(n - 1), line);
      }
      if (e.u == e.v) throw TreeError("self-loop at vertex " + std::to_string(e.u), line);
      if (e.u > e.v) std::swap(e.u, e.v);
      if (!sets.unite(e.u, e.v)) {
        if (std::find(edges.begin(), edges.begin() + i, e) != edges.begin() + i) {
          throw TreeError("duplicate edge " + std::to_string(e.u) + " " + std::to_string(e.v), line);
        }
        throw TreeError("edge " + std::to_string(e.u) + " " + std::to_string(e.v) +
                            " closes a cycle (graph is not a tree)",
                        line);
      }
      edges[i] = e;
    }

    Tree t;
    t.n_ = n;
    std::sort(edges.begin(), edges.end());
    t.edges_ = std::move(edges);
    t.offsets_.assign(n + 1, 0);
    for (const Edge& e : t.edges_) {
      ++t.offsets_[e.u + 1];
      ++t.offsets_[e.v + 1];
    }
    for (int v = 0; v < n; ++v) t.offsets_[v + 1] += t.offsets_[v];
    t.adj_.resize(t.offsets_[n]);
    std::vector<std::int32_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
    for (const Edge& e : t.edges_) {
      t.adj_[fill[e.u]++] = e.v;
      t.adj_[fill[e.v]++] = e.u;
    }
    for (int v = 0; v < n; ++v) {
      std::sort(t.adj_.begin() + t.offsets_[v], t.adj_.begin() + t.offsets_[v + 1]);
    }
    return t;
  }
};

Tree Tree::from_edges(int n, std::vector<Edge> edges) {
  return TreeBuilder::build(n, std::move(edges), [](std::size_t) { return 0; });
}

bool Tree::adjacent(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) return false;
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Tree parse_edge_list(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(pos, end - pos));
    pos = end + 1;
  }
  if (lines.empty()) throw TreeError("empty input", 1);

  long long n = 0;
  if (!parse_int(lines[0], n)) throw TreeError("malformed vertex count", 1);
  if (n < 1) throw TreeError("vertex count must be positive", 1);
  if (n > 100'000'000) throw TreeError("vertex count too large", 1);

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const int line = static_cast<int>(i) + 1;
    std::string_view s = lines[i];
    if (static_cast<long long>(edges.size()) == n - 1) {
      if (!s.empty()) throw TreeError("too many edges (expected " + std::to_string(n - 1) + ")", line);
      continue;
    }
    std::size_t sp = s.find(' ');
    long long u = 0;
    long long v = 0;
    if (sp == std::string_view::npos || !parse_int(s.substr(0, sp), u) ||
        !parse_int(s.substr(sp + 1), v)) {
      throw TreeError("malformed edge, expected \"u v\"", line);
    }
    if (u < 0 || u >= n || v < 0 || v >= n) {
      throw TreeError("vertex out of range 0.." + std::to_string(n - 1), line);
    }
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (static_cast<long long>(edges.size()) != n - 1) {
    throw TreeError("expected " + std::to_string(n - 1) + " edges, got " + std::to_string(edges.size()),
                    static_cast<int>(lines.size()) + 1);
  }
  return TreeBuilder::build(static_cast<int>(n), std::move(edges),
                            [](std::size_t i) { return static_cast<int>(i) + 2; });
}

std::string serialize_edge_list(const Tree& t) {
  std::string out = std::to_string(t.size()) + "\n";
  for (const Edge& e : t.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

std::vector<int> bfs_distances(const Tree& t, Vertex source) {
  std::vector<int> dist(t.size(), -1);
  std::vector<Vertex> queue;
  queue.reserve(t.size());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : t.neighbors(v)) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

int diameter(const Tree& t) {
  if (t.size() <= 1) return 0;
  auto first = bfs_distances(t, 0);
  Vertex far = static_cast<Vertex>(std::max_element(first.begin(), first.end()) - first.begin());
  auto second = bfs_distances(t, far);
  return *std::max_element(second.begin(), second.end());
}

Vertex default_root(const Tree& t) {
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.degree(v) == 1) return v;
  }
  return 0;
}

RootedTree root_at(Tree t, std::optional<Vertex> preferred) {
  const int n = t.size();
  if (n < 1) throw TreeError("cannot root an empty tree");
  Vertex root = default_root(t);
  if (preferred) {
    if (!t.contains(*preferred)) throw TreeError("root " + std::to_string(*preferred) + " out of range");
    if (n >= 2 && t.degree(*preferred) != 1) {
      throw TreeError("root " + std::to_string(*preferred) + " is not a leaf");
    }
    root = *preferred;
  }

  RootedTree rt;
  rt.root_ = root;
  rt.parent_.assign(n, kNoVertex);
  rt.depth_.assign(n, 0);
  rt.order_.reserve(n);
  rt.order_.push_back(root);
  std::vector<char> seen(n, 0);
  seen[root] = 1;
  for (std::size_t head = 0; head < rt.order_.size(); ++head) {
    Vertex v = rt.order_[head];
    for (Vertex w : t.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = 1;
        rt.parent_[w] = v;
        rt.depth_[w] = rt.depth_[v] + 1;
        rt.order_.push_back(w);
      }
    }
  }
  rt.max_depth_ = rt.depth_[rt.order_.back()];

  rt.child_offsets_.assign(n + 1, 0);
  for (Vertex v = 0; v < n; ++v) {
    if (rt.parent_[v] != kNoVertex) ++rt.child_offsets_[rt.parent_[v] + 1];
  }
  for (Vertex v = 0; v < n; ++v) rt.child_offsets_[v + 1] += rt.child_offsets_[v];
  rt.child_.resize(n - 1);
  std::vector<std::int32_t> fill(rt.child_offsets_.begin(), rt.child_offsets_.end() - 1);
  for (Vertex v = 0; v < n; ++v) {  // ascending v keeps every child list sorted
    if (rt.parent_[v] != kNoVertex) rt.child_[fill[rt.parent_[v]]++] = v;
  }

  // Preorder numbering for subtree membership.
  rt.enter_.assign(n, 0);
  rt.leave_.assign(n, 0);
  std::vector<std::pair<Vertex, std::int32_t>> stack;
  stack.reserve(n);
  std::int32_t clock = 0;
  stack.emplace_back(root, 0);
  rt.enter_[root] = clock++;
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    auto kids = rt.children(v);
    if (next < static_cast<std::int32_t>(kids.size())) {
      Vertex c = kids[next++];
      rt.enter_[c] = clock++;
      stack.emplace_back(c, 0);
    } else {
      rt.leave_[v] = clock;
      stack.pop_back();
    }
  }

  rt.tree_ = std::move(t);
  return rt;
}

std::vector<Vertex> RootedTree::path(Vertex u, Vertex w) const {
  std::vector<Vertex> head;
  std::vector<Vertex> tail;
  while (depth_[u] > depth_[w]) {
    head.push_back(u);
    u = parent_[u];
  }
  while (depth_[w] > depth_[u]) {
    tail.push_back(w);
    w = parent_[w];
  }
  while (u != w) {
    head.push_back(u);
    tail.push_back(w);
    u = parent_[u];
    w = parent_[w];
  }
  head.push_back(u);
  head.insert(head.end(), tail.rbegin(), tail.rend());
  return head;
}

}  // namespace edom

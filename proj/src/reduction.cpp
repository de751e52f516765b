#include "edom/reduction.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace edom {

std::vector<Edge> ReductionStep::h_edges() const {
  std::vector<Edge> out;
  if (kind == StepKind::LeafPair) {
    out.push_back({removed[0], removed[1]});
  } else {
    for (Vertex c : removed) out.push_back({c, x});
  }
  return out;
}

Reducer::Reducer(const RootedTree& rt, std::optional<std::uint64_t> tie_seed)
    : rt_(rt),
      alive_(rt.size(), 1),
      alive_children_(rt.size()),
      buckets_(rt.max_depth() + 1),
      depth_cursor_(rt.max_depth()),
      remaining_(rt.size()) {
  for (Vertex v = 0; v < rt.size(); ++v) {
    alive_children_[v] = static_cast<std::int32_t>(rt.children(v).size());
    buckets_[rt.depth(v)].push_back(v);
  }
  if (tie_seed) {
    std::mt19937_64 rng(*tie_seed);
    for (auto& b : buckets_) std::shuffle(b.begin(), b.end(), rng);
  }
}

std::optional<ReductionStep> Reducer::step() {
  if (remaining_ <= 2) return std::nullopt;

  // With at least three vertices left the deepest leaf sits at depth >= 2,
  // and every live vertex of the deepest occupied level is a leaf.
  Vertex leaf = kNoVertex;
  while (leaf == kNoVertex) {
    if (depth_cursor_ < 2) throw std::logic_error("reducer: no reducible leaf with >= 3 vertices left");
    auto& bucket = buckets_[depth_cursor_];
    while (bucket_cursor_ < bucket.size() && !alive_[bucket[bucket_cursor_]]) ++bucket_cursor_;
    if (bucket_cursor_ < bucket.size()) {
      leaf = bucket[bucket_cursor_];
    } else {
      --depth_cursor_;
      bucket_cursor_ = 0;
    }
  }

  const Vertex p = rt_.parent(leaf);
  ReductionStep out;
  out.x = p;
  if (alive_children_[p] == 1) {
    out.kind = StepKind::LeafPair;
    out.removed = {p, leaf};
    alive_[p] = alive_[leaf] = 0;
    --alive_children_[rt_.parent(p)];
    remaining_ -= 2;
    return out;
  }

  out.kind = StepKind::LeafBunch;
  for (Vertex c : rt_.children(p)) {
    if (!alive_[c]) continue;
    if (alive_children_[c] != 0) {
      throw std::logic_error("reducer: child " + std::to_string(c) + " of " + std::to_string(p) +
                             " is not a leaf at maximum depth");
    }
    out.removed.push_back(c);
    alive_[c] = 0;
  }
  alive_children_[p] = 0;
  remaining_ -= static_cast<int>(out.removed.size());
  return out;
}

Terminal Reducer::terminal() const {
  Terminal t;
  t.vertices.push_back(rt_.root());
  for (Vertex v = 0; v < rt_.size(); ++v) {
    if (alive_[v] && v != rt_.root()) t.vertices.push_back(v);
  }
  return t;
}

std::pair<int, ReductionTrace> compute_edn(const RootedTree& rt, std::optional<std::uint64_t> tie_seed) {
  Reducer reducer(rt, tie_seed);
  ReductionTrace trace;
  while (auto s = reducer.step()) trace.steps.push_back(std::move(*s));
  trace.terminal = reducer.terminal();
  return {trace.edn(), std::move(trace)};
}

std::pair<int, ReductionTrace> compute_edn(const Tree& t) { return compute_edn(root_at(t)); }

std::string format_trace(const ReductionTrace& trace) {
  std::string out;
  for (const ReductionStep& s : trace.steps) {
    if (s.kind == StepKind::LeafPair) {
      out += "P " + std::to_string(s.removed[0]) + " " + std::to_string(s.removed[1]);
    } else {
      out += "B " + std::to_string(s.x);
      for (Vertex c : s.removed) out += " " + std::to_string(c);
    }
    out += '\n';
  }
  out += trace.terminal.is_edge() ? "T K2" : "T K1";
  for (Vertex v : trace.terminal.vertices) out += " " + std::to_string(v);
  out += '\n';
  return out;
}

ReductionTrace parse_trace(std::string_view text) {
  ReductionTrace trace;
  std::istringstream in{std::string(text)};
  std::string line;
  bool done = false;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("trace line " + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (done) fail("content after terminal line");
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    std::vector<Vertex> nums;
    std::string kind;
    if (tag == "T") ls >> kind;
    Vertex v;
    while (ls >> v) nums.push_back(v);
    if (!ls.eof()) fail("malformed vertex");
    if (tag == "P") {
      if (nums.size() != 2) fail("P expects two vertices");
      trace.steps.push_back({StepKind::LeafPair, nums[0], nums});
    } else if (tag == "B") {
      if (nums.size() < 3) fail("B expects an anchor and at least two children");
      trace.steps.push_back({StepKind::LeafBunch, nums[0], {nums.begin() + 1, nums.end()}});
    } else if (tag == "T") {
      if ((kind == "K1" && nums.size() != 1) || (kind == "K2" && nums.size() != 2) ||
          (kind != "K1" && kind != "K2")) {
        fail("terminal must be \"T K1 v\" or \"T K2 u v\"");
      }
      trace.terminal.vertices = nums;
      done = true;
    } else {
      fail("unknown step tag '" + tag + "'");
    }
  }
  if (!done) throw std::invalid_argument("trace has no terminal line");
  return trace;
}

}  // namespace edom

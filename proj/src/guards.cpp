#include "edom/guards.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace edom {

namespace {

Vertex parse_vertex(std::string_view s) {
  Vertex v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size() || v < 0) {
    throw std::invalid_argument("malformed vertex '" + std::string(s) + "'");
  }
  return v;
}

template <class F>
void for_each_field(std::string_view text, char sep, F f) {
  if (text.empty()) return;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = text.find(sep, pos);
    f(text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
}

}  // namespace

GuardConfig::GuardConfig(std::vector<Vertex> vs) : v_(std::move(vs)) {
  std::sort(v_.begin(), v_.end());
  if (std::adjacent_find(v_.begin(), v_.end()) != v_.end()) {
    throw std::invalid_argument("guard configuration lists a vertex twice");
  }
  if (!v_.empty() && v_.front() < 0) throw std::invalid_argument("negative vertex in guard configuration");
}

bool GuardConfig::contains(Vertex v) const { return std::binary_search(v_.begin(), v_.end(), v); }

std::vector<char> GuardConfig::mask(int n) const {
  std::vector<char> m(n, 0);
  for (Vertex v : v_) {
    if (v < n) m[v] = 1;
  }
  return m;
}

std::string format_config(const GuardConfig& c) {
  std::string out;
  for (Vertex v : c) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

GuardConfig parse_config(std::string_view text) {
  std::vector<Vertex> vs;
  for_each_field(text, ',', [&](std::string_view f) { vs.push_back(parse_vertex(f)); });
  return GuardConfig(std::move(vs));
}

DefenseMove::DefenseMove(std::vector<Move> ms) : moves(std::move(ms)) { std::sort(moves.begin(), moves.end()); }

std::string format_move(const DefenseMove& m) {
  std::string out;
  for (const Move& mv : m.moves) {
    if (!out.empty()) out += ',';
    out += std::to_string(mv.from) + ">" + std::to_string(mv.to);
  }
  return out;
}

DefenseMove parse_move(std::string_view text) {
  std::vector<Move> ms;
  for_each_field(text, ',', [&](std::string_view f) {
    std::size_t gt = f.find('>');
    if (gt == std::string_view::npos) throw std::invalid_argument("malformed move '" + std::string(f) + "'");
    ms.push_back({parse_vertex(f.substr(0, gt)), parse_vertex(f.substr(gt + 1))});
  });
  return DefenseMove(std::move(ms));
}

}  // namespace edom

#include "edom/oracle.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "edom/matching.hpp"

namespace edom {

Mask to_mask(const GuardConfig& c) {
  Mask m = 0;
  for (Vertex v : c) m |= Mask{1} << v;
  return m;
}

GuardConfig from_mask(Mask m) {
  std::vector<Vertex> vs;
  for (Vertex v = 0; m != 0; ++v, m >>= 1) {
    if (m & 1) vs.push_back(v);
  }
  return GuardConfig(std::move(vs));
}

namespace {

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Perfect matching between the guards of `from` and the vertices of `to`,
// each guard staying or crossing one edge.
bool masks_reachable(Mask from, Mask to, const std::vector<Mask>& closed_nb) {
  std::vector<Vertex> src;
  std::vector<Vertex> dst;
  for (Vertex v = 0; (from >> v) != 0; ++v) {
    if ((from >> v) & 1) src.push_back(v);
  }
  for (Vertex v = 0; (to >> v) != 0; ++v) {
    if ((to >> v) & 1) dst.push_back(v);
  }
  std::vector<std::vector<int>> adj(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if ((closed_nb[src[i]] >> dst[j]) & 1) adj[i].push_back(static_cast<int>(j));
    }
  }
  auto match = max_bipartite_matching(adj, static_cast<int>(dst.size()));
  return std::none_of(match.begin(), match.end(), [](int m) { return m < 0; });
}

}  // namespace

std::optional<std::size_t> SafeSet::index_of(Mask m) const {
  if (m >= index_.size() || index_[m] < 0) return std::nullopt;
  return static_cast<std::size_t>(index_[m]);
}

bool SafeSet::is_safe(Mask m) const {
  auto i = index_of(m);
  return i && safe_[*i];
}

std::vector<Mask> SafeSet::safe_masks() const {
  std::vector<Mask> out;
  for (std::size_t i = 0; i < configs_.size(); ++i) {
    if (safe_[i]) out.push_back(configs_[i]);
  }
  return out;
}

bool SafeSet::empty() const { return std::none_of(safe_.begin(), safe_.end(), [](char s) { return s != 0; }); }

void SafeSet::compute_ranks() const {
  if (!rank_.empty()) return;
  const std::size_t count = configs_.size();
  const int n = tree_.size();
  rank_.assign(count, 0);
  for (std::size_t i = 0; i < count; ++i) {
    if (safe_[i]) rank_[i] = kForever;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < count; ++i) {
      if (safe_[i]) continue;
      int value = kForever;
      for (Vertex a = 0; a < n && value > 0; ++a) {
        int best = -1;
        for (std::uint32_t s : succ_[i]) {
          if ((configs_[s] >> a) & 1) best = std::max(best, rank_[s]);
        }
        int attack_value = best < 0 ? 0 : (best == kForever ? kForever : best + 1);
        value = std::min(value, attack_value);
      }
      if (value != rank_[i]) {
        rank_[i] = value;
        changed = true;
      }
    }
  }
}

int SafeSet::survival_rank(Mask m) const {
  auto i = index_of(m);
  if (!i) throw std::invalid_argument("configuration is not a " + std::to_string(k_) + "-subset of the tree");
  compute_ranks();
  return rank_[*i];
}

SafeSet safe_configs(const Tree& t, int k, OracleBudget budget) {
  const int n = t.size();
  if (n > budget.max_vertices || n > 30) {
    throw OracleBudgetExceeded("oracle limited to " + std::to_string(budget.max_vertices) + " vertices, tree has " +
                               std::to_string(n));
  }
  if (k < 0 || k > n) throw std::invalid_argument("guard count " + std::to_string(k) + " outside 0.." + std::to_string(n));
  if (binomial(n, k) > budget.max_configs) {
    throw OracleBudgetExceeded(std::to_string(binomial(n, k)) + " configurations exceed the oracle budget of " +
                               std::to_string(budget.max_configs));
  }

  SafeSet ss;
  ss.tree_ = t;
  ss.k_ = k;
  ss.index_.assign(std::size_t{1} << n, -1);
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (std::popcount(m) == k) {
      ss.index_[m] = static_cast<std::int32_t>(ss.configs_.size());
      ss.configs_.push_back(m);
    }
  }

  std::vector<Mask> closed_nb(n);
  for (Vertex v = 0; v < n; ++v) {
    closed_nb[v] = Mask{1} << v;
    for (Vertex w : t.neighbors(v)) closed_nb[v] |= Mask{1} << w;
  }

  const std::size_t count = ss.configs_.size();
  ss.succ_.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    const Mask c = ss.configs_[i];
    Mask reach = 0;
    for (Vertex v = 0; v < n; ++v) {
      if ((c >> v) & 1) reach |= closed_nb[v];
    }
    // Every k-subset of the closed neighbourhood is a candidate successor.
    for (Mask s = reach;; s = (s - 1) & reach) {
      if (std::popcount(s) == k && masks_reachable(c, s, closed_nb)) {
        ss.succ_[i].push_back(static_cast<std::uint32_t>(ss.index_[s]));
      }
      if (s == 0) break;
    }
  }

  const Mask all = n == 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  ss.safe_.assign(count, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < count; ++i) {
      if (!ss.safe_[i]) continue;
      Mask covered = 0;
      for (std::uint32_t s : ss.succ_[i]) {
        if (ss.safe_[s]) covered |= ss.configs_[s];
      }
      if (covered != all) {
        ss.safe_[i] = 0;
        changed = true;
      }
    }
  }
  return ss;
}

int oracle_edn(const Tree& t, OracleBudget budget) {
  for (int k = 1; k <= t.size(); ++k) {
    if (!safe_configs(t, k, budget).empty()) return k;
  }
  return t.size();
}

std::optional<DefenseMove> optimal_defense(const SafeSet& ss, const GuardConfig& c, Vertex attacked) {
  auto i = ss.index_of(to_mask(c));
  if (c.size() != ss.k() || !i) throw std::invalid_argument("configuration does not match the safe set");
  std::optional<Mask> best;
  int best_rank = -1;
  for (std::uint32_t s : ss.successors(*i)) {
    const Mask m = ss.config(s);
    if (!((m >> attacked) & 1)) continue;
    const int r = ss.survival_rank(m);
    if (r > best_rank || (r == best_rank && m < *best)) {
      best = m;
      best_rank = r;
    }
  }
  if (!best) return std::nullopt;
  return transition_move(ss.tree(), c, from_mask(*best));
}

GuardConfig OracleDefender::place(int k) {
  if (k != ss_.k()) throw std::invalid_argument("oracle defender prepared for " + std::to_string(ss_.k()) + " guards");
  std::optional<Mask> best;
  int best_rank = -1;
  for (std::size_t i = 0; i < ss_.config_count(); ++i) {
    const int r = ss_.survival_rank(ss_.config(i));
    if (r > best_rank) {
      best = ss_.config(i);
      best_rank = r;
    }
  }
  return best ? from_mask(*best) : GuardConfig{};
}

std::optional<DefenseMove> OracleDefender::respond(const GuardConfig& current, Vertex attacked, const GameTrace&) {
  return optimal_defense(ss_, current, attacked);
}

std::uint64_t tree_hash(const Tree& t) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : serialize_edge_list(t)) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

void write_safe_cache(std::ostream& out, const SafeSet& ss) {
  out << "tree " << tree_hash(ss.tree()) << " k " << ss.k() << '\n';
  for (Mask m : ss.safe_masks()) out << m << '\n';
}

std::optional<std::vector<Mask>> read_safe_cache(std::istream& in, const Tree& t, int k) {
  std::string header;
  if (!std::getline(in, header)) return std::nullopt;
  std::istringstream hs(header);
  std::string tag_tree;
  std::string tag_k;
  std::uint64_t hash = 0;
  int cached_k = -1;
  if (!(hs >> tag_tree >> hash >> tag_k >> cached_k) || tag_tree != "tree" || tag_k != "k") return std::nullopt;
  if (hash != tree_hash(t) || cached_k != k) return std::nullopt;
  std::vector<Mask> masks;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    masks.push_back(static_cast<Mask>(std::stoul(line)));
  }
  return masks;
}

}  // namespace edom

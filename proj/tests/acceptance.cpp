// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "edom/analysis.hpp"
#include "edom/attack.hpp"
#include "edom/defense.hpp"
#include "edom/generate.hpp"
#include "edom/matching.hpp"
#include "edom/oracle.hpp"
#include "support.hpp"

using namespace edom;

namespace {

using Clock = std::chrono::steady_clock;

struct Result {
  bool pass = true;
  std::string detail;
  std::string first_failure;

  void fail(const std::string& what) {
    if (pass) first_failure = what;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::vector<Tree> corpus(int lo, int hi) {
  std::vector<Tree> out;
  for (int n = lo; n <= hi; ++n) {
    for (Tree& t : enumerate_trees(n)) out.push_back(std::move(t));
  }
  return out;
}

std::string one_line(const Tree& t) {
  std::string s = serialize_edge_list(t);
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

std::vector<GuardConfig> subsets_of_size(int n, int k) {
  std::vector<GuardConfig> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (std::popcount(m) == k) out.push_back(from_mask(m));
  }
  return out;
}

GuardConfig random_subset(int n, int k, std::mt19937_64& rng) {
  std::vector<Vertex> all(n);
  std::iota(all.begin(), all.end(), 0);
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(k);
  return GuardConfig(all);
}

Result edn_cross_validation() {
  Result r;
  int count = 0;
  for (const Tree& t : corpus(2, 9)) {
    ++count;
    const int reduced = compute_edn(t).first;
    const int brute = oracle_edn(t);
    if (reduced != brute) {
      r.fail("tree " + one_line(t) + " reduction " + std::to_string(reduced) + " oracle " + std::to_string(brute));
    }
  }
  r.detail = std::to_string(count) + " trees, 2 <= n <= 9";
  return r;
}

Result nice_neocolonization() {
  Result r;
  std::vector<Tree> trees = corpus(2, 9);
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) trees.push_back(random_tree(2 + static_cast<int>(rng() % 59), rng));
  for (const Tree& t : trees) {
    RootedTree rt = root_at(t);
    auto [edn, trace] = compute_edn(rt);
    NeoColonization nc;
    try {
      nc = build_nice_neocol(rt, trace);
    } catch (const std::exception& e) {
      r.fail("tree " + one_line(t) + ": " + e.what());
      continue;
    }
    ValidationReport report = validate_nice(nc, rt);
    if (!report.ok()) r.fail("tree " + one_line(t) + ": " + report.violations.front());
    if (nc.total_weight() != edn) r.fail("tree " + one_line(t) + ": total weight differs from EDN");
  }
  r.detail = std::to_string(trees.size()) + " trees";
  return r;
}

// Criteria 3 and 4 share the games.
struct GameStats {
  Result bound;
  Result attacks;
  long games = 0;
  int worst_slack = 1 << 30;  // min over games of diam - attacks
};

void play_one(GameStats& st, const std::shared_ptr<const Analysis>& a, const OracleDefender& proto,
              const GuardConfig& c) {
  const Tree& t = a->tree();
  TheoremAttacker attacker(a);
  OracleDefender defender = proto;
  ++st.games;
  GameTrace trace;
  try {
    trace = play_game(t, attacker, defender, c, std::max(1, 2 * t.size()));
  } catch (const std::exception& e) {
    st.bound.fail("tree " + one_line(t) + " C=" + format_config(c) + ": " + e.what());
    st.attacks.fail("game aborted");
    return;
  }
  if (!trace.attacker_won()) {
    st.bound.fail("tree " + one_line(t) + " C=" + format_config(c) + ": defender survived");
    st.attacks.fail("tree " + one_line(t) + " C=" + format_config(c) + ": defender survived");
    return;
  }
  const int attacks = trace.outcome->turn;
  st.worst_slack = std::min(st.worst_slack, a->diameter - attacks);
  if (attacks > a->diameter) {
    st.bound.fail("tree " + one_line(t) + " C=" + format_config(c) + ": " + std::to_string(attacks) +
                  " attacks > diam " + std::to_string(a->diameter));
  }
  if (attacks > t.size()) st.attacks.fail("tree " + one_line(t) + " C=" + format_config(c));
}

GameStats theorem_games() {
  GameStats st;
  for (const Tree& t : corpus(2, 8)) {
    auto a = analyze(t);
    SafeSet ss = safe_configs(t, a->edn - 1);
    OracleDefender proto(ss);
    for (const GuardConfig& c : subsets_of_size(t.size(), a->edn - 1)) play_one(st, a, proto, c);
  }
  const long exhaustive = st.games;
  std::mt19937_64 rng(77);
  for (const Tree& t : corpus(9, 10)) {
    auto a = analyze(t);
    SafeSet ss = safe_configs(t, a->edn - 1);
    OracleDefender proto(ss);
    for (int i = 0; i < 50; ++i) play_one(st, a, proto, random_subset(t.size(), a->edn - 1, rng));
  }
  st.bound.detail = std::to_string(exhaustive) + " exhaustive games n <= 8, " +
                    std::to_string(st.games - exhaustive) + " sampled games n = 9..10, min slack " +
                    std::to_string(st.worst_slack);
  st.attacks.detail = std::to_string(st.games) + " games";
  return st;
}

Result canonical_soundness() {
  Result r;
  long states = 0;
  for (const Tree& t : corpus(1, 9)) {
    auto a = analyze(t);
    SafeSet ss = safe_configs(t, a->edn);
    auto [c0, s0] = initial_canonical_config(a);
    std::set<std::pair<std::vector<Vertex>, int>> seen;
    std::vector<DefenseState> stack{s0};
    while (!stack.empty()) {
      DefenseState s = stack.back();
      stack.pop_back();
      std::vector<Vertex> extras(s.extras().begin(), s.extras().end());
      if (!seen.insert({extras, s.last_attacked_part().value_or(-1)}).second) continue;
      ++states;
      const GuardConfig c = s.config();
      if (!ss.is_safe(to_mask(c))) r.fail("tree " + one_line(t) + ": unsafe " + format_config(c));
      for (Vertex v = 0; v < t.size(); ++v) {
        DefenseState next = s;
        DefenseMove m = canonical_response(next, v);
        if (!validate_defense(t, c, m, v)) r.fail("tree " + one_line(t) + ": bad response to " + std::to_string(v));
        stack.push_back(std::move(next));
      }
    }
  }

  std::mt19937_64 rng(4040);
  int sequences = 0;
  for (int i = 0; i < 100; ++i) {
    Tree t = random_tree(1 + static_cast<int>(rng() % 40), rng);
    auto a = analyze(t);
    for (int seq = 0; seq < 5; ++seq, ++sequences) {
      auto [c, state] = initial_canonical_config(a);
      for (int turn = 0; turn < 50; ++turn) {
        const Vertex v = static_cast<Vertex>(rng() % t.size());
        DefenseMove m = canonical_response(state, v);
        if (!validate_defense(t, c, m, v)) {
          r.fail("tree " + one_line(t) + ": attack on " + std::to_string(v) + " not survived");
          break;
        }
        c = apply_move(c, m);
      }
    }
  }
  r.detail = std::to_string(states) + " canonical states on all trees n <= 9, " + std::to_string(sequences) +
             " random sequences of 50 attacks";
  return r;
}

Result move_legality() {
  Result r;
  std::mt19937_64 rng(6);
  int positives = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 2 + static_cast<int>(rng() % 7);
    Tree t = random_tree(n, rng);
    const int k = 1 + static_cast<int>(rng() % std::min(n, 6));
    GuardConfig from = random_subset(n, k, rng);
    GuardConfig to;
    if (i % 2 == 0) {
      to = random_subset(n, k, rng);
    } else {
      // Nudge random guards to random neighbours so that feasible targets
      // are common.
      std::vector<Vertex> vs(from.begin(), from.end());
      for (Vertex& v : vs) {
        auto nb = t.neighbors(v);
        if (rng() % 2 == 0) v = nb[rng() % nb.size()];
      }
      std::sort(vs.begin(), vs.end());
      if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) {
        to = random_subset(n, k, rng);
      } else {
        to = GuardConfig(vs);
      }
    }
    const Vertex attacked = static_cast<Vertex>(rng() % n);
    const bool brute = testing::brute_force_reachable(t, from, to) && to.contains(attacked);
    auto move = transition_move(t, from, to);
    const bool matched = move && validate_defense(t, from, *move, attacked);
    positives += brute;
    if (brute != matched) {
      r.fail("tree " + one_line(t) + " C=" + format_config(from) + " C'=" + format_config(to) + " a=" +
             std::to_string(attacked));
    }
  }
  r.detail = "1000 instances, " + std::to_string(positives) + " legal";
  return r;
}

Result known_families() {
  Result r;
  for (int n = 2; n <= 16; ++n) {
    Tree p = path_tree(n);
    const int expected = (n + 1) / 2;
    if (compute_edn(p).first != expected) r.fail("P" + std::to_string(n) + " by reduction");
    if (n <= 10 && oracle_edn(p) != expected) r.fail("P" + std::to_string(n) + " by oracle");
  }
  for (int m = 2; m <= 10; ++m) {
    Tree s = star_tree(m);
    if (compute_edn(s).first != 2) r.fail("K1," + std::to_string(m) + " by reduction");
    if (oracle_edn(s) != 2) r.fail("K1," + std::to_string(m) + " by oracle");
  }
  r.detail = "paths n = 2..16 (oracle n <= 10), stars m = 2..10";
  return r;
}

Result performance() {
  Result r;
  std::mt19937_64 rng(8);
  std::ostringstream detail;
  detail.precision(3);

  auto time_build = [&](const std::string& name, Tree t) {
    const auto start = Clock::now();
    RootedTree rt = root_at(std::move(t));
    auto [edn, trace] = compute_edn(rt);
    NeoColonization nc = build_nice_neocol(rt, trace);
    const double s = seconds_since(start);
    detail << name << " " << s << " s (edn " << edn << "); ";
    if (s >= 5.0) r.fail(name + " took " + std::to_string(s) + " s");
  };
  time_build("random n=1e6", random_tree(1'000'000, rng));
  time_build("path n=1e6", path_tree(1'000'000));

  // Per-turn attacker cost on random under-provisioned configurations and
  // random reference attacks (games end too quickly to time many turns).
  auto time_attack = [&](const std::string& name, Tree t) {
    auto a = analyze(std::move(t));
    const int n = a->tree().size();
    AttackerState state(a);
    double worst = 0;
    for (int i = 0; i < 50; ++i) {
      GuardConfig c = random_subset(n, a->edn - 1, rng);
      state.set_reference_attack(static_cast<Vertex>(rng() % n));
      const auto start = Clock::now();
      try {
        state.next_attack(c);
      } catch (const std::exception& e) {
        r.fail(name + ": " + e.what());
      }
      worst = std::max(worst, seconds_since(start));
    }
    detail << name << " worst " << worst * 1000 << " ms over 50 calls";
    if (worst >= 0.05) r.fail(name + " took " + std::to_string(worst * 1000) + " ms");
  };
  time_attack("next_attack random n=1e5", random_tree(100'000, rng));
  detail << "; ";
  time_attack("next_attack path n=1e5", path_tree(100'000));
  r.detail = detail.str();
  return r;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int id, const char* name, const Result& r, double secs) {
    std::printf("%s criterion %d: %s [%s; %.1f s]\n", r.pass ? "PASS" : "FAIL", id, name, r.detail.c_str(), secs);
    if (!r.pass) {
      std::printf("    first failure: %s\n", r.first_failure.c_str());
      ++failures;
    }
    std::fflush(stdout);
  };
  auto timed = [](auto f) {
    const auto start = Clock::now();
    auto r = f();
    return std::make_pair(std::move(r), seconds_since(start));
  };

  {
    auto [r, s] = timed(edn_cross_validation);
    report(1, "EDN by reduction equals the brute-force oracle", r, s);
  }
  {
    auto [r, s] = timed(nice_neocolonization);
    report(2, "nice neo-colonization is valid and weighs EDN", r, s);
  }
  {
    auto [st, s] = timed(theorem_games);
    report(3, "theorem attacker beats the optimal defender within diam(T)", st.bound, s);
    report(4, "every such game uses at most n attacks", st.attacks, 0.0);
  }
  {
    auto [r, s] = timed(canonical_soundness);
    report(5, "canonical defense stays safe and survives", r, s);
  }
  {
    auto [r, s] = timed(move_legality);
    report(6, "matching legality agrees with brute force", r, s);
  }
  {
    auto [r, s] = timed(known_families);
    report(7, "paths and stars", r, s);
  }
  {
    auto [r, s] = timed(performance);
    report(8, "linear-time construction and fast attacks", r, s);
  }
  return failures == 0 ? 0 : 1;
}

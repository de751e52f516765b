#include "edom/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "edom/analysis.hpp"
#include "edom/attack.hpp"
#include "edom/defense.hpp"
#include "edom/engine.hpp"
#include "edom/generate.hpp"
#include "edom/http.hpp"
#include "edom/oracle.hpp"

namespace edom {

namespace {

// Domain failure reported with exit code 1.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Tree read_tree(const std::string& path, std::istream& in) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DomainError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  }
  try {
    return parse_edge_list(text);
  } catch (const TreeError& e) {
    throw DomainError(path + ": " + e.what());
  }
}

std::unique_ptr<Defender> make_defender(const std::string& kind, std::shared_ptr<const Analysis> analysis,
                                        int k, std::uint64_t seed, std::optional<SafeSet>& oracle_storage) {
  if (kind == "canonical") return std::make_unique<CanonicalDefender>(analysis);
  if (kind == "random") return std::make_unique<RandomDefender>(analysis->tree(), seed);
  oracle_storage = safe_configs(analysis->tree(), k);
  return std::make_unique<OracleDefender>(*oracle_storage);
}

struct TreeCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

TreeCheck verify_tree(const Tree& t) {
  TreeCheck check;
  auto fail = [&](const std::string& s) {
    check.ok = false;
    check.problems.push_back(s);
  };
  auto analysis = analyze(t);
  const int oracle = oracle_edn(t);
  if (oracle != analysis->edn) {
    fail("reduction EDN " + std::to_string(analysis->edn) + " != oracle EDN " + std::to_string(oracle));
  }
  for (const auto& v : validate_nice(analysis->neocol, analysis->rooted).violations) fail(v);
  for (const auto& v : check_weight_accounting(analysis->neocol, analysis->trace).violations) fail(v);
  auto [c0, state] = initial_canonical_config(analysis);
  if (c0.size() == oracle && !safe_configs(t, oracle).is_safe(to_mask(c0))) {
    fail("canonical configuration {" + format_config(c0) + "} is not safe");
  }
  return check;
}

int cmd_edn(const std::string& file, std::istream& in, std::ostream& out) {
  out << compute_edn(read_tree(file, in)).first << '\n';
  return 0;
}

int cmd_neocol(const std::string& file, std::optional<Vertex> root, bool json, std::istream& in, std::ostream& out) {
  Tree t = read_tree(file, in);
  std::shared_ptr<const Analysis> a;
  try {
    a = analyze(std::move(t), root);
  } catch (const TreeError& e) {
    throw DomainError(e.what());
  }
  if (json) {
    out << neocol_to_json(*a).dump(2) << '\n';
    return 0;
  }
  const NeoColonization& nc = a->neocol;
  out << "edn " << a->edn << '\n' << "root " << a->rooted.root() << '\n';
  for (PartId p = 0; p < nc.part_count(); ++p) {
    out << "part " << p << " top " << nc.top(p) << " weight " << nc.weight(p) << " vertices";
    for (Vertex v : nc.part(p)) out << ' ' << v;
    out << '\n';
  }
  for (Vertex v = 0; v < a->rooted.size(); ++v) out << "class " << v << ' ' << class_letter(a->classes[v]) << '\n';
  return 0;
}

int cmd_attack(const std::string& file, const std::string& guards, const std::string& defender_kind, bool explain,
               std::uint64_t seed, std::istream& in, std::ostream& out) {
  GuardConfig c0;
  try {
    c0 = parse_config(guards);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--guards: ") + e.what());
  }
  auto analysis = analyze(read_tree(file, in));
  for (Vertex g : c0) {
    if (!analysis->tree().contains(g)) throw UsageError("--guards: vertex " + std::to_string(g) + " out of range");
  }
  if (c0.size() >= analysis->edn) {
    throw DomainError("no forced win: " + std::to_string(c0.size()) + " guards but EDN is " +
                      std::to_string(analysis->edn));
  }
  std::optional<SafeSet> oracle;
  auto defender = make_defender(defender_kind, analysis, c0.size(), seed, oracle);
  TheoremAttacker attacker(analysis);
  GameTrace trace = play_game(analysis->tree(), attacker, *defender, c0, std::max(analysis->rooted.size(), 1));
  Json j = trace_to_json(trace);
  if (explain) {
    Json diag = Json::array();
    for (const auto& d : attacker.diagnostics()) diag.push_back(diagnostic_to_json(d));
    j = Json{{"trace", std::move(j)}, {"explain", std::move(diag)}};
  }
  out << j.dump(2) << '\n';
  return 0;
}

int cmd_simulate(const std::string& file, int k, int turns, const std::string& attacker_kind,
                 const std::string& defender_kind, std::uint64_t seed, std::istream& in, std::ostream& out,
                 std::ostream& err) {
  auto analysis = analyze(read_tree(file, in));
  if (k < 0 || k > analysis->rooted.size()) throw UsageError("--k must lie in 0..n");
  std::optional<SafeSet> oracle;
  auto defender = make_defender(defender_kind, analysis, k, seed, oracle);
  std::unique_ptr<Attacker> attacker;
  if (attacker_kind == "theorem") attacker = std::make_unique<TheoremAttacker>(analysis);
  else attacker = std::make_unique<RandomAttacker>(analysis->rooted.size(), seed + 1);
  GuardConfig c0 = defender->place(k);
  GameTrace trace = play_game(analysis->tree(), *attacker, *defender, c0, turns);
  out << trace_to_json(trace).dump(2) << '\n';
  err << (trace.attacker_won() ? "attacker wins on turn " : "defender survives ") << trace.outcome->turn
      << (trace.attacker_won() ? "" : " turns") << '\n';
  return 0;
}

int cmd_oracle(const std::string& file, std::optional<int> k, const std::string& cache, std::istream& in,
               std::ostream& out) {
  Tree t = read_tree(file, in);
  if (!k) {
    out << oracle_edn(t) << '\n';
    return 0;
  }
  if (*k < 0 || *k > t.size()) throw UsageError("--k must lie in 0..n");
  std::optional<std::vector<Mask>> masks;
  if (!cache.empty()) {
    std::ifstream f(cache);
    if (f) masks = read_safe_cache(f, t, *k);
  }
  if (!masks) {
    SafeSet ss = safe_configs(t, *k);
    masks = ss.safe_masks();
    if (!cache.empty()) {
      std::ofstream f(cache);
      if (!f) throw DomainError("cannot write cache '" + cache + "'");
      write_safe_cache(f, ss);
    }
  }
  out << "safe " << masks->size() << '\n';
  for (Mask m : *masks) out << format_config(from_mask(m)) << '\n';
  return 0;
}

int cmd_verify(int max_n, bool exhaustive, int random_count, std::uint64_t seed, std::ostream& out, std::ostream& err) {
  if (max_n < 1 || max_n > 12) throw UsageError("--max-n must lie in 1..12");
  std::vector<Tree> trees;
  if (exhaustive || random_count <= 0) {
    for (int n = 1; n <= max_n; ++n) {
      auto level = enumerate_trees(n);
      trees.insert(trees.end(), level.begin(), level.end());
    }
  } else {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(std::min(2, max_n), max_n);
    for (int i = 0; i < random_count; ++i) trees.push_back(random_tree(size(rng), rng));
  }
  int failures = 0;
  for (const Tree& t : trees) {
    TreeCheck check = verify_tree(t);
    if (!check.ok) {
      ++failures;
      err << "FAIL tree:\n" << serialize_edge_list(t);
      for (const auto& p : check.problems) err << "  " << p << '\n';
    }
  }
  out << "verified " << trees.size() << " trees, " << failures << " failures\n";
  return failures == 0 ? 0 : 1;
}

int cmd_gen(int n, int count, std::uint64_t seed, bool exhaustive, std::ostream& out) {
  if (n < 1) throw UsageError("--n must be positive");
  std::vector<Tree> trees;
  if (exhaustive) {
    if (n > 16) throw UsageError("--exhaustive supports n <= 16");
    trees = enumerate_trees(n);
  } else {
    std::mt19937_64 rng(seed);
    for (int i = 0; i < count; ++i) trees.push_back(random_tree(n, rng));
  }
  for (std::size_t i = 0; i < trees.size(); ++i) {
    if (i) out << '\n';
    out << serialize_edge_list(trees[i]);
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"m-eternal domination on trees: EDN, neo-colonization, attacker and oracle"};
  app.name("edom");
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  bool explain = false;
  bool exhaustive = false;
  std::string guards;
  std::string defender = "canonical";
  std::string attacker = "theorem";
  std::string cache;
  int k = 0;
  int turns = 50;
  int max_n = 0;
  int random_count = 0;
  int n = 0;
  int count = 1;
  int port = 8080;
  std::uint64_t seed = 0;
  std::optional<Vertex> root;
  const std::vector<std::string> defenders{"canonical", "oracle", "random"};

  auto* edn = app.add_subcommand("edn", "Eternal domination number by reduction");
  edn->add_option("FILE", file, "Tree file ('-' for stdin)")->required();

  auto* neocol = app.add_subcommand("neocol", "Nice neo-colonization and vertex classes");
  neocol->add_option("FILE", file)->required();
  neocol->add_flag("--json", json);
  neocol->add_option("--root", root, "Leaf to root at");

  auto* attack = app.add_subcommand("attack", "Theorem attacker against a given configuration");
  attack->add_option("FILE", file)->required();
  attack->add_option("--guards", guards, "Comma-separated guard vertices")->required();
  attack->add_option("--defender", defender)->check(CLI::IsMember(defenders));
  attack->add_flag("--explain", explain);
  attack->add_option("--seed", seed);

  auto* simulate = app.add_subcommand("simulate", "Play a game between two strategies");
  simulate->add_option("FILE", file)->required();
  simulate->add_option("--k", k)->required();
  simulate->add_option("--turns", turns)->check(CLI::PositiveNumber);
  simulate->add_option("--attacker", attacker)->check(CLI::IsMember({"theorem", "random"}));
  simulate->add_option("--defender", defender)->check(CLI::IsMember(defenders));
  simulate->add_option("--seed", seed);

  std::optional<int> oracle_k;
  auto* oracle = app.add_subcommand("oracle", "Brute-force EDN or safe configurations");
  oracle->add_option("FILE", file)->required();
  oracle->add_option("--k", oracle_k);
  oracle->add_option("--cache", cache, "Safe-set cache file");

  auto* verify = app.add_subcommand("verify", "Cross-check reductions against the oracle");
  verify->add_option("--max-n", max_n)->required();
  auto* exhaustive_flag = verify->add_flag("--exhaustive", exhaustive);
  verify->add_option("--random", random_count)->excludes(exhaustive_flag);
  verify->add_option("--seed", seed);

  auto* gen = app.add_subcommand("gen", "Generate trees in wire format");
  gen->add_option("--n", n)->required();
  gen->add_option("--count", count)->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", seed);
  gen->add_flag("--exhaustive", exhaustive);

  auto* serve = app.add_subcommand("serve", "Run the game service");
  serve->add_option("--port", port)->check(CLI::Range(1, 65535));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*edn) return cmd_edn(file, in, out);
    if (*neocol) return cmd_neocol(file, root, json, in, out);
    if (*attack) return cmd_attack(file, guards, defender, explain, seed, in, out);
    if (*simulate) return cmd_simulate(file, k, turns, attacker, defender, seed, in, out, err);
    if (*oracle) return cmd_oracle(file, oracle_k, cache, in, out);
    if (*verify) return cmd_verify(max_n, exhaustive, random_count, seed, out, err);
    if (*gen) return cmd_gen(n, count, seed, exhaustive, out);
    if (*serve) return run_server(port, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return 2;
  } catch (const GameAborted& e) {
    err << "game aborted: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace edom

#include <doctest.h>

#include <sstream>

#include "edom/cli.hpp"
#include "edom/json.hpp"
#include "edom/tree.hpp"
#include "support.hpp"

using namespace edom;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kDs = serialize_edge_list(testing::double_star());

}  // namespace

TEST_CASE("edn") {
  Run r = run({"edn", "-"}, kDs);
  CHECK(r.code == 0);
  CHECK(r.out == "3\n");
  CHECK(run({"edn", "/nonexistent/tree.txt"}).code == 1);
  CHECK(run({"edn", "-"}, "3\n0 1\n").code == 1);
  CHECK(run({"edn"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
}

TEST_CASE("neocol") {
  Run text = run({"neocol", "-"}, kDs);
  CHECK(text.code == 0);
  CHECK(text.out.find("part 0 top 2 weight 3 vertices 0 1 2 3 4 5") != std::string::npos);
  Run json = run({"neocol", "-", "--json"}, kDs);
  Json j = Json::parse(json.out);
  CHECK(j["edn"] == 3);
  CHECK(j["root"] == 2);
  CHECK(run({"neocol", "-", "--root", "0"}, kDs).code == 1);
}

TEST_CASE("attack") {
  Run r = run({"attack", "-", "--guards", "0,1"}, kDs);
  REQUIRE(r.code == 0);
  Json trace = Json::parse(r.out);
  CHECK(trace["outcome"]["winner"] == "attacker");
  CHECK(trace["outcome"]["turn"] <= 3);
  CHECK(trace["turns"][0]["attack"] == 3);

  Run explained = run({"attack", "-", "--guards", "0,1", "--explain", "--defender", "oracle"}, kDs);
  REQUIRE(explained.code == 0);
  Json e = Json::parse(explained.out);
  CHECK(e["explain"].is_array());
  CHECK(e["trace"]["outcome"]["winner"] == "attacker");

  CHECK(run({"attack", "-", "--guards", "0,1,2"}, kDs).code == 1);
  CHECK(run({"attack", "-", "--guards", "0,1", "--defender", "nobody"}, kDs).code == 2);
}

TEST_CASE("simulate") {
  Run r = run({"simulate", "-", "--k", "3", "--turns", "50", "--attacker", "random", "--defender", "canonical",
               "--seed", "5"},
              kDs);
  REQUIRE(r.code == 0);
  CHECK(Json::parse(r.out)["outcome"]["winner"] == "defender");
  Run again = run({"simulate", "-", "--k", "3", "--turns", "50", "--attacker", "random", "--defender", "canonical",
                   "--seed", "5"},
                  kDs);
  CHECK(again.out == r.out);
}

TEST_CASE("oracle") {
  CHECK(run({"oracle", "-"}, kDs).out == "3\n");
  Run p3 = run({"oracle", "-", "--k", "2"}, "3\n0 1\n1 2\n");
  CHECK(p3.out == "safe 3\n0,1\n0,2\n1,2\n");
}

TEST_CASE("verify") {
  Run r = run({"verify", "--max-n", "8", "--exhaustive"});
  CHECK(r.code == 0);
  CHECK(r.out.find(" 0 failures") != std::string::npos);
  CHECK(run({"verify", "--max-n", "8", "--random", "20", "--seed", "1"}).code == 0);
  CHECK(run({"verify", "--max-n", "8", "--exhaustive", "--random", "3"}).code == 2);
}

TEST_CASE("gen") {
  Run a = run({"gen", "--n", "12", "--count", "3", "--seed", "9"});
  Run b = run({"gen", "--n", "12", "--count", "3", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Run all = run({"gen", "--n", "6", "--exhaustive"});
  std::size_t blocks = 0;
  std::istringstream lines(all.out);
  std::string text;
  std::string line;
  auto flush = [&] {
    if (text.empty()) return;
    CHECK(parse_edge_list(text).size() == 6);
    ++blocks;
    text.clear();
  };
  while (std::getline(lines, line)) {
    if (line.empty()) flush();
    else text += line + "\n";
  }
  flush();
  CHECK(blocks == 6);
}

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "extlat/cli.hpp"
#include "extlat/counting.hpp"
#include "extlat/generate.hpp"
#include "extlat/poset_io.hpp"

using namespace extlat;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  args.insert(args.begin(), "extlat");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("cli: counting verbs") {
  auto r = cli({"count", "--family", "antichain", "--n", "5"});
  CHECK(r.code == 0);
  CHECK(first_line(r.out) == "120");
  CHECK(first_line(cli({"count", "--family", "diamond"}).out) == "2");
  CHECK(first_line(cli({"count", "--family", "perm:2,4,1,3"}).out) == "5");
  CHECK(first_line(cli({"omega", "--family", "chain", "--n", "2", "--t", "3"}).out) == "6");

  Poset p = random_poset(7, 0.35, 17);
  std::string path = "cli_test_poset.txt";
  {
    std::ofstream f(path);
    f << to_text(p);
  }
  auto j = nlohmann::json::parse(cli({"omega", "--poset", path, "--t-max", "4", "--format", "json"}).out);
  for (int t = 0; t <= 4; ++t) CHECK(j["omega"][t] == order_polynomial(p, t).get_str());
  CHECK(first_line(cli({"count", "--poset", path}).out) == count_extensions(p).get_str());
  std::remove(path.c_str());
  CHECK(cli({"count", "--poset", "no_such_file.txt"}).code == 2);
}

TEST_CASE("cli: witnesses") {
  auto r = cli({"witness", "eta", "--sigma", "2,4,1,3"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string head, sample, extra;
  std::getline(lines, head);
  std::getline(lines, sample);
  CHECK(head == "1");
  CHECK_FALSE(sample.empty());
  CHECK_FALSE(std::getline(lines, extra));
  CHECK(first_line(cli({"witness", "xi", "--family", "diamond"}).out) == "8");
  CHECK(first_line(cli({"witness", "color", "--family", "chain", "--n", "2", "--t", "2"}).out) == "2");
  CHECK(first_line(cli({"witness", "refine", "--family", "chain", "--n", "2", "--t", "1", "--k", "2"}).out) == "1");
  auto j = nlohmann::json::parse(cli({"witness", "hook", "--family", "tree:0,1,1", "--format", "json"}).out);
  CHECK(j["agrees"] == true);
  CHECK(j["uncovered"] == "0");
}

TEST_CASE("cli: dynamics and restrictions") {
  CHECK(first_line(cli({"promote", "--family", "antichain", "--n", "3", "--word", "1,2,3"}).out) == "2,3,1");
  CHECK(first_line(cli({"evacuate", "--family", "antichain", "--n", "3", "--word", "1,2,3"}).out) == "3,2,1");
  auto orbit = cli({"orbit", "--family", "tree:0,1,2,0,0", "--u", "1,3", "--positions", "2,4", "--gens", "fixed"});
  CHECK(first_line(orbit.out) == "2");
  CHECK(first_line(cli({"orbit", "--family", "tree:0,1,2,0,0", "--u", "1,3", "--positions", "2,4", "--gens",
                        "pairs"})
                       .out) == "1");
  CHECK(first_line(cli({"decide", "--family", "diamond", "--u", "1,4", "--positions", "1,4"}).out) == "nonempty");
  CHECK(first_line(cli({"decide", "--family", "diamond", "--u", "2", "--positions", "1"}).out) ==
        "empty (boundary-not-extreme)");
  CHECK(first_line(cli({"find", "--family", "diamond", "--u", "3", "--positions", "2"}).out) == "1,3,2,4");
  CHECK(first_line(cli({"unique", "--family", "diamond", "--u", "2", "--positions", "2"}).out) == "unique");
}

TEST_CASE("cli: verify and audits") {
  auto v = cli({"verify", "--check", "SID", "--sigma", "2,4,1,3", "--format", "json"});
  CHECK(v.code == 0);
  auto j = nlohmann::json::parse(v.out);
  CHECK(j["lhs"] == "25");
  CHECK(j["rhs"] == "24");
  auto csv = cli({"verify", "--check", "BW", "--family", "chain", "--n", "2", "--format", "csv"});
  CHECK(csv.out == "check_id,instance,lhs,rhs,holds,equality\nBW,P=2:1<2,2,2,true,true\n");
  CHECK(first_line(cli({"audit", "shepp", "--family", "chain", "--n", "2", "--y-block", "1,2", "--t", "3"}).out) ==
        "ok lattice=9 support=6 pairs=all triples=all");
  CHECK(first_line(cli({"audit", "matching", "--family", "antichain", "--n", "3", "--x", "1", "--a", "2"}).out) ==
        "not saturated matching=2/4");
  CHECK(first_line(cli({"classes", "--n", "3"}).out) == "invariant posets=19 classes=8");
}

TEST_CASE("cli: sweeps are stable across jobs") {
  auto one = cli({"sweep", "--check", "STANLEY", "--n-max", "4", "--format", "json"});
  auto four = cli({"sweep", "--check", "STANLEY", "--n-max", "4", "--jobs", "4", "--format", "json"});
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(nlohmann::json::parse(one.out)["status"] == "theorem_verified");
  auto r1 = cli({"sweep", "--check", "OP-HP", "--random", "--n-min", "6", "--n-max", "6", "--samples", "10", "--seed",
                 "5", "--format", "json"});
  auto r2 = cli({"sweep", "--check", "OP-HP", "--random", "--n-min", "6", "--n-max", "6", "--samples", "10", "--seed",
                 "5", "--jobs", "2", "--format", "json"});
  CHECK(r1.out == r2.out);
  auto csv = cli({"sweep", "--check", "EHS", "--n-max", "3", "--format", "csv"});
  CHECK(first_line(csv.out) == "check_id,instance,lhs,rhs,holds,equality");
  auto text = cli({"sweep", "--check", "MATCHING", "--n-max", "3"});
  CHECK(text.code == 0);
  CHECK(text.out.find("conjecture_counterexample") != std::string::npos);
}

TEST_CASE("cli: usage errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"frobnicate"}).code == 2);
  CHECK(cli({"count"}).code == 2);
  CHECK(cli({"count", "--family", "chain"}).code == 2);
  CHECK(cli({"count", "--family", "chain", "--n", "3", "--format", "yaml"}).code == 2);
  CHECK(cli({"verify", "--check", "NOPE", "--family", "diamond"}).code == 2);
  CHECK(cli({"sweep", "--check", "BW", "--n-max", "9"}).code == 2);
  CHECK(cli({"decide", "--family", "diamond", "--u", "2,3", "--positions", "2,3"}).code == 2);
  CHECK(cli({"witness", "nope", "--family", "diamond"}).code == 2);
  auto bad = cli({"count", "--family", "perm:1,1"});
  CHECK(bad.code == 2);
  CHECK(bad.err.rfind("error:", 0) == 0);
  CHECK(cli({"--help"}).code == 0);
}

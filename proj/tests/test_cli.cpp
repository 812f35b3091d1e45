#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "rank74/cli.hpp"
#include "rank74/rgraph.hpp"

using nlohmann::json;
using rank74::cli::run;

namespace {
  struct Result {
    int         status;
    std::string out, err;
  };

  Result cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int                s = run(args, out, err);
    return {s, out.str(), err.str()};
  }

  json report(Result const& r) {
    return json::parse(r.out);
  }
}  // namespace

TEST_CASE("cli build") {
  auto r = cli({"build", "--word", "X00"});
  REQUIRE(r.status == 0);
  auto j = report(r);
  CHECK(j["complex"]["triangles"].size() == 8);
  CHECK(j["validation"]["valid"] == true);
  CHECK(j["config"]["command"] == "build");
  CHECK(j["config"]["word"] == "X00");
  CHECK(j["versions"].contains("rank74"));
  CHECK(j["group"].contains("relators"));

  r = cli({"build", "--word", "Y00.Y00.Y00"});
  REQUIRE(r.status == 0);
  CHECK(report(r)["complex"]["triangles"].size() == 24);

  r = cli({"build", "--word", "X99"});
  CHECK(r.status == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("error") != std::string::npos);

  SUBCASE("to a file") {
    std::string path = "cli_build_X01.json";
    r                = cli({"build", "--word", "X01", "--out", path});
    CHECK(r.status == 0);
    std::ifstream in(path);
    CHECK(json::parse(in)["complex"]["triangles"].size() == 8);
    std::remove(path.c_str());
  }
}

TEST_CASE("cli usage errors") {
  CHECK(cli({}).status == 1);
  CHECK(cli({"frobnicate"}).status == 1);
  CHECK(cli({"build"}).status == 1);
  CHECK(cli({"certify", "--word", "X00", "--kind", "pi1"}).status == 1);
  CHECK(cli({"census", "--n", "3", "--pattern", "XX"}).status == 1);
  CHECK(cli({"census", "--n", "13", "--mode", "enumeration"}).status == 1);
  CHECK(cli({"build", "--word", "X00", "--format", "dot"}).status == 1);
  CHECK(cli({"rgraph", "--word", "X10.X11", "--fixture"}).status == 1);
  CHECK(cli({"--help"}).status == 0);
}

TEST_CASE("cli rgraph and fixtures") {
  for (std::string w : {"X00", "Y00", "X01.X00", "X00.Y00", "Y00.Y00.Y00"}) {
    CAPTURE(w);
    auto r = cli({"rgraph", "--word", w, "--fixture"});
    CHECK(r.status == 0);
    CHECK(r.err.find("pass") != std::string::npos);
  }
  // Y00 DOT round trip
  auto dot = cli({"rgraph", "--word", "Y00", "--format", "dot"});
  auto js  = cli({"rgraph", "--word", "Y00"});
  REQUIRE(dot.status == 0);
  CHECK(rank74::parse_rgraph_dot(dot.out)
        == rank74::edge_multiset(report(js)["graph"]["edges"]));
  // the closed-up graph is a different graph and has no fixture
  CHECK(cli({"rgraph", "--word", "X00", "--closed"}).status == 0);
  CHECK(cli({"rgraph", "--word", "X00", "--closed", "--fixture"}).status == 1);
}

TEST_CASE("cli certify exit codes") {
  auto r = cli({"certify", "--word", "X01.X00", "--kind", "z2"});
  CHECK(r.status == 0);
  CHECK(report(r)["verified"] == true);
  CHECK(report(r)["witness"].contains("strips"));

  r = cli({"certify", "--word", "Y00.X00.Y00.X00.Y00", "--kind", "meso"});
  CHECK(r.status == 2);
  CHECK(report(r)["status"] == "none");

  r = cli({"certify", "--word", "Y00.Y00.Y00", "--kind", "meso"});
  CHECK(r.status == 0);
  CHECK(report(r)["witness"]["outer"].size() == 6);

  r = cli({"certify", "--word", "X00.X10.X11", "--kind", "exprank"});
  CHECK(r.status == 0);
  CHECK(report(r)["verified"] == true);

  // R(X00) has no two cycles through a common vertex, and the search is exhaustive
  r = cli({"certify", "--word", "X00", "--kind", "exprank"});
  CHECK(r.status == 2);

  // cut off below the needed period: bounds are reported with the failure
  r = cli({"certify", "--word", "X00.X00.Y01", "--kind", "z2", "--max-cycles", "0",
           "--annulus-L", "1"});
  CHECK(r.status == 3);
  CHECK(report(r)["config"]["annulus_L"] == 1);
  CHECK(report(r)["status"] == "inconclusive");
}

TEST_CASE("cli census rows") {
  auto r = cli({"census", "--n", "3", "--pattern", "Y00Y00", "--mode", "recurrence",
                "--format", "csv"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\n3,54,46,5,") != std::string::npos);

  r = cli({"census", "--n", "2", "--format", "csv"});
  REQUIRE(r.status == 0);
  CHECK(r.out.find("\n2,18,17,1,") != std::string::npos);
  CHECK(r.out.find("\n3,") == std::string::npos);

  r = cli({"census", "--n", "3", "--mode", "compare"});
  REQUIRE(r.status == 0);
  auto cmp = report(r)["comparison"];
  CHECK(cmp[0]["status"] == "agree");
  CHECK(cmp[1]["status"] == "agree");
  CHECK(cmp[2]["recurrence"][1] == "5");
  CHECK(cmp[2]["status"] == (cmp[2]["enumeration"][1] == "5" ? "agree" : "differ"));

  r = cli({"census", "--n", "4", "--pattern", "omega0"});
  REQUIRE(r.status == 0);
  CHECK(report(r)["table"]["derivation"].get<std::string>().find("b_{n+3} + b_{n+2} + b_{n+1} = a_n")
        != std::string::npos);
}

TEST_CASE("cli sample") {
  std::vector<std::string> args{"sample", "--n", "2", "--trials", "10000",
                                "--property", "exprank-pattern-a", "--seed", "1"};
  auto r = cli(args);
  REQUIRE(r.status == 0);
  auto j = report(r);
  CHECK(j["exact"]["value"] == "1/18");
  CHECK(j["exact"]["in_ci"] == true);
  CHECK(j["config"]["seed"] == 1);
  CHECK(cli(args).out == r.out);
  CHECK(cli({"sample", "--n", "2", "--trials", "0"}).status == 1);
}

TEST_CASE("cli reports are byte-stable") {
  for (std::vector<std::string> a :
       {std::vector<std::string>{"build", "--word", "X00.Y01"},
        {"rgraph", "--word", "X01.X00"},
        {"certify", "--word", "Y00.Y00.Y00", "--kind", "z2"},
        {"census", "--n", "5", "--mode", "enumeration"}}) {
    auto x = cli(a), y = cli(a);
    CHECK(x.status == y.status);
    CHECK(x.out == y.out);
  }
}

#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "ks/cli.hpp"
#include "ks/parser.hpp"

using namespace ks;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(run({"verify", "--f", "power:1:3", "--gen", "V1"}).code == 0);
  CHECK(run({"verify", "--f", "exp:1", "--gen", "Z1"}).code == 1);
  CHECK(run({"verify", "--f", "cubic", "--gen", "V1"}).code == 2);
  CHECK(run({"verify", "--f", "zero", "--gen", "x,u,0,0,0"}).code == 2);
  CHECK(run({"verify", "--f", "zero"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"spot-check", "--f", "power:1:3", "--gen", "V2", "--trials", "50", "--seed", "0"}).code == 0);
  CHECK(run({"spot-check", "--f", "power:1:3", "--gen", "V2,0,0,0,0", "--trials", "5"}).code == 2);
  CHECK(run({"spot-check", "--f", "power:1:5", "--gen", "V2", "--trials", "5"}).code == 1);
  CHECK(run({"spot-check", "--f", "exp:1", "--gen", "T", "--trials", "5"}).code == 2);
  CHECK(run({"beta-kernel", "--f", "exp:1", "--degree", "2"}).code == 2);
  CHECK(run({"table", "--f", "power:1:p"}).code == 2);
  auto r = run({"verify", "--f", "nope", "--gen", "T"});
  CHECK(r.out.empty());
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("json schema") {
  auto r = run({"--json", "classify", "--f", "arbitrary"});
  REQUIRE(r.code == 0);
  auto doc = nlohmann::ordered_json::parse(r.out);
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  REQUIRE(keys.size() >= 7);
  CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 7) ==
        std::vector<std::string>{"command", "f", "degree", "dimension", "generators", "structure_constants", "defect"});
  CHECK(doc["dimension"] == 4);
  std::vector<std::string> names;
  for (const auto& g : doc["generators"]) names.push_back(g["name"]);
  CHECK(names == std::vector<std::string>{"T", "R", "Xt", "Yt"});

  auto v = nlohmann::json::parse(run({"--json", "verify", "--f", "exp:1", "--gen", "Z1"}).out);
  CHECK_FALSE(v["defect"].empty());
  CHECK(v["defect"][0]["coeff"] == "2");

  auto b = nlohmann::json::parse(run({"--json", "bracket", "--gen1", "T", "--gen2", "R"}).out);
  for (const char* k : {"xi", "phi", "tau", "alpha", "beta"}) CHECK(b["generators"][0][k] == "0");
}

TEST_CASE("output is deterministic and re-parses") {
  const std::vector<std::string> args{"--json", "classify", "--f", "zero"};
  auto a = run(args), b = run(args);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  for (const auto& g : doc["generators"]) {
    std::string spec;
    for (const char* k : {"xi", "phi", "tau", "alpha", "beta"}) {
      std::string s = g[k];
      CHECK(canonical_string(parse_poly(s, ParseContext::Generator)) == s);
      spec += (spec.empty() ? "" : ",") + s;
    }
    CHECK(run({"verify", "--f", "zero", "--gen", spec}).code == 0);
  }
  CHECK(run({"--json", "spot-check", "--f", "zero", "--gen", "V1", "--trials", "3", "--seed", "9"}).out ==
        run({"--json", "spot-check", "--f", "zero", "--gen", "V1", "--trials", "3", "--seed", "9"}).out);
}

TEST_CASE("text commands") {
  auto d = run({"determine"});
  CHECK(d.code == 0);
  CHECK(d.out.find("E1: xi_x") != std::string::npos);
  CHECK(d.out.find("E5 = ") != std::string::npos);
  auto red = run({"determine", "--reduced"});
  CHECK(red.out.find("R7 = ") != std::string::npos);
  auto t = run({"table", "--f", "zero"});
  CHECK(t.code == 0);
  CHECK(t.out.find("closed: yes") != std::string::npos);
  auto s = run({"classify", "--f", "power:1:3", "--scan", "5"});
  CHECK(s.out.find("stable: yes") != std::string::npos);
  auto bk = run({"beta-kernel", "--f", "zero", "--degree", "2"});
  CHECK(bk.out.find("dimension: 6") != std::string::npos);
}

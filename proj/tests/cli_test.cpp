#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "qmull/cli.hpp"

using namespace qmull::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> argv, const std::string& input = "") {
  argv.insert(argv.begin(), "qmull");
  std::vector<char*> ptrs;
  for (auto& s : argv) ptrs.push_back(s.data());
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = qmull::cli::main(static_cast<int>(ptrs.size()), ptrs.data(), in, out, err);
  return {code, out.str(), err.str()};
}

Json json_of(const Run& r) { return Json::parse(r.out); }

}  // namespace

TEST_CASE("documented examples") {
  auto a = run({"mull", "--partition", "2,1", "--l", "3", "--method", "both"});
  CHECK(a.code == 0);
  CHECK(a.out == "{\"M\":[1,1,1],\"agree\":true}\n");
  auto b = run({"jl", "--partition", "3,3", "--l", "3"});
  CHECK(b.out == "{\"x\":[0,0],\"j\":0}\n");
  auto c = run({"qbinom", "--s", "2", "--t", "1", "--lprime", "4"});
  CHECK(json_of(c)["zero"] == true);
  CHECK(json_of(c)["value"] == "v + v^-1");
}

TEST_CASE("subcommands") {
  CHECK(json_of(run({"mull", "--partition", "2,1", "--l", "inf", "--method", "symbol"}))["M"] == Json::array({2, 1}));
  CHECK(json_of(run({"classify", "--m", "1", "--n", "1", "--r", "2", "--l", "2", "--count"}))["count"] == 3);
  auto w = json_of(run({"classify", "--m", "1", "--n", "2", "--r", "2", "--l", "2", "--witnesses"}));
  REQUIRE(w["witnesses"].size() == 1);
  CHECK(w["witnesses"][0]["weight"] == "0|1,1");
  CHECK(json_of(run({"sigma", "--weight", "2,1|0,0", "--l", "3"}))["sigma"] == "1,1|1,0");
  auto tr = json_of(run({"serganova", "--weight", "2,1|0,0", "--l", "3", "--trace"}));
  CHECK(tr["steps"].size() == 4);
  CHECK(json_of(run({"cosets", "--lambda", "2,1", "--mu", "1,2"}))["count"] == 2);
  CHECK(json_of(run({"matrices", "--m", "2", "--n", "0", "--r", "2", "--count"}))["count"] == 10);
  CHECK(json_of(run({"iota", "--lambda", "2|1", "--mu", "1|2", "--d", "1,2,3"}))["matrix"] == "1,1;0,1");
  CHECK(json_of(run({"daggermat", "--matrix", "1,1;0,0", "--m", "1", "--n", "1"}))["dagger"] == "0,1;0,1");
  CHECK(json_of(run({"hecke", "--r", "3", "--expr", "T1*T1 - (v^2-1)*T1 - v^2"}))["result"] == "0");
  CHECK(json_of(run({"hecke", "--r", "2", "--expr", "T1", "--dagger"}))["terms"].size() == 1);
  auto p = json_of(run({"pbw", "--m", "1", "--n", "1", "--lambda", "1|0", "--word", "E(1,2,1) E(2,1,1)"}));
  REQUIRE(p["terms"].size() == 1);
  CHECK(p["terms"][0]["coeff"] == "1");
  auto z = json_of(run({"pbw", "--m", "1", "--n", "1", "--lambda", "0|0", "--word", "E(1,2,1) E(2,1,1)", "--at-q",
                        "--lprime", "3"}));
  CHECK(z["zero"] == true);
  auto nf = json_of(run({"pbw", "--m", "1", "--n", "1", "--word", "E(1,2,1) E(2,1,1)"}));
  CHECK(nf["normal_form"].size() == 2);
}

TEST_CASE("text output") {
  auto r = run({"--output", "text", "jl", "--partition", "3,3", "--l", "3"});
  CHECK(r.out == "x: [0,0]\nj: 0\n");
  auto s = run({"jl", "--partition", "3,3", "--l", "3", "--output", "text"});
  CHECK(s.out == r.out);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"nosuch"}).code == 2);
  CHECK(run({"jl", "--partition", "1,2", "--l", "3"}).code == 2);
  CHECK(run({"jl", "--partition", "x", "--l", "3"}).code == 2);
  CHECK(run({"jl", "--partition", "2"}).code == 2);
  CHECK(run({"mull", "--partition", "3", "--l", "2"}).code == 2);
  CHECK(run({"mull", "--partition", "1", "--l", "2", "--method", "magic"}).code == 2);
  CHECK(run({"pbw", "--m", "1", "--n", "1", "--word", "E(1,1,1)"}).code == 2);
  CHECK(run({"pbw", "--m", "1", "--n", "1", "--lambda", "1,0|", "--word", ""}).code == 2);
  CHECK(run({"hecke", "--r", "3", "--expr", "T1 *"}).code == 2);
  CHECK(run({"qbinom", "--s", "2", "--t", "1", "--lprime", "2"}).code == 2);
  CHECK(run({"qbinom", "--s", "2", "--t", "1", "--lprime", "4", "--char", "4"}).code == 2);
  CHECK(run({"verify", "nosuch"}).code == 2);
  CHECK(run({"verify", "comp", "--samples", "0"}).code == 2);
  auto e = run({"jl", "--partition", "1,2", "--l", "3"});
  CHECK(e.err.find("error:") == 0);
  CHECK(e.err.find('\n') == e.err.size() - 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify is reproducible") {
  auto a = run({"verify", "comp", "--samples", "30", "--seed", "9"});
  auto b = run({"verify", "comp", "--samples", "30", "--seed", "9"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(json_of(a)["passed"] == true);
  CHECK(run({"verify", "involution"}).code == 0);
}

TEST_CASE("batch") {
  const std::string in =
      "{\"cmd\":\"jl\",\"args\":{\"partition\":[3,3],\"l\":3}}\n"
      "\n"
      "{\"cmd\":\"qbinom\",\"args\":{\"s\":2,\"t\":1,\"lprime\":\"4\"}}\n"
      "{\"cmd\":\"jl\",\"args\":{\"partition\":[3,3],\"l\":3,\"bogus\":1}}\n"
      "not json\n";
  auto r = run({"batch"}, in);
  CHECK(r.code == 2);
  std::istringstream lines(r.out);
  std::vector<Json> resp;
  for (std::string l; std::getline(lines, l);) resp.push_back(Json::parse(l));
  REQUIRE(resp.size() == 4);
  for (const auto& x : resp) CHECK(x["schema"] == kSchemaVersion);
  CHECK(resp[0]["result"]["j"] == 0);
  CHECK(resp[1]["result"]["zero"] == true);
  CHECK(resp[2]["ok"] == false);
  CHECK(resp[3]["ok"] == false);
  CHECK(run({"batch"}, "{\"cmd\":\"jl\",\"args\":{\"partition\":\"2,1\",\"l\":\"2\"}}\n").code == 0);
}

TEST_CASE("command table matches dispatch") {
  for (const auto& c : commands()) {
    try {
      run_command(c.name, Json::object());
    } catch (const UsageError& e) {
      CHECK(std::string(e.what()).find("unknown command") == std::string::npos);
    }
  }
}

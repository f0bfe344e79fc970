#include "doctest.h"

#include "odograph/cli.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "odograph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = odograph::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

nlohmann::ordered_json doc(const Run& r) { return nlohmann::ordered_json::parse(r.out); }

const std::string kData = ODOGRAPH_DATA_DIR;

}  // namespace

TEST_CASE("simplicity report") {
  Run r = run({"simplicity", "--n", "2,4"});
  CHECK(r.code == 0);
  CHECK(r.out == "{\"simple\":false,\"p\":[2,0],\"q\":[0,1]}\n");
  CHECK(doc(run({"simplicity", "--n", "2,3"}))["simple"] == true);
}

TEST_CASE("word commands") {
  CHECK(run({"normal-form", "--n", "2,3", "x2:1 x1:0"}).out == "x1:1 x2:0\n");
  CHECK(run({"multiply", "--n", "2,3", "x1:0", "x2:1"}).out == "x1:0 x2:1\n");
  auto e = doc(run({"encode", "--n", "2,3", "x1:1 x2:2"}));
  CHECK(e["code"] == "5");
  CHECK(run({"encode", "--n", "2,3", "--degree", "1,1", "--code", "5"}).out == "x1:1 x2:2\n");
  auto a = doc(run({"act", "--n", "2,3", "--g", "1", "x1:1 x2:2"}));
  CHECK(a["image"] == "x1:0 x2:0");
  CHECK(a["restriction"] == "1");
  CHECK(doc(run({"solve-restriction", "--n", "2,3", "--l", "0", "x1:1"}))["g"] == "-1");
}

TEST_CASE("verification commands") {
  Run rel = run({"verify-relations", "--n", "2,3"});
  CHECK(rel.code == 0);
  CHECK(doc(rel)["pass"] == true);
  CHECK(run({"verify-qn", "--n", "2,3"}).code == 0);
  CHECK(run({"verify-psystem", "--n", "2,3", "--degrees", "1,0;0,1", "--exp-range=-3,3"}).code == 0);
  CHECK(run({"check-axioms", "--n", "2,3", "--g-range=-3,3", "--max-length", "2"}).code == 0);
  CHECK(run({"cubic-check", "--n", "2,3,5"}).code == 0);

  auto lcm = doc(run({"lcm", "--n", "2,4"}));
  CHECK(lcm["right_lcm"] == false);
  auto kw = doc(run({"kernel-witness", "--n", "2,4"}));
  CHECK(kw["left"] == "x1:0 x1:0");
  CHECK(kw["right"] == "x2:0");
  CHECK(doc(run({"kernel-witness", "--n", "2,3"}))["simple"] == true);
}

TEST_CASE("topology commands") {
  auto roots = doc(run({"roots", "--n", "2,3", "--angle", "1/3", "--degree", "1,0"}));
  CHECK(roots["roots"] == nlohmann::ordered_json::parse(R"(["1/6","2/3"])"));
  auto orbit = doc(run({"orbit", "--n", "2,3", "--from", "0", "--target", "1/3", "--epsilon", "1/12"}));
  CHECK(orbit["p"] == nlohmann::ordered_json::parse("[0,1]"));
  CHECK(orbit["distance"] == "0");
  CHECK(doc(run({"contracting", "--n", "2,3"}))["pass"] == true);
  CHECK(run({"contracting", "--n", "2,3", "--delta", "1/4"}).code == 2);
}

TEST_CASE("spec files") {
  Run full = run({"normal-form", "--theta-file", kData + "/commuting_222.json", "x3:1 x1:0"});
  CHECK(full.code == 0);
  CHECK(full.out == "x1:0 x3:1\n");
  CHECK(full.err.find("warning") != std::string::npos);
  Run cubic = run({"cubic-check", "--theta-file", kData + "/commuting_222.json"});
  CHECK(cubic.code == 0);
  CHECK(cubic.err.empty());

  Run theta = run({"normal-form", "--n", "2,2", "--theta-file", kData + "/commuting_theta_22.json", "x2:1 x1:0"});
  CHECK(theta.code == 0);
  CHECK(theta.out == "x1:0 x2:1\n");
  CHECK(run({"normal-form", "--spec", R"({"n":[2,3]})", "x2:1 x1:0"}).out == "x1:1 x2:0\n");
}

TEST_CASE("usage and spec errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"normal-form", "x1:0"}).code == 2);
  CHECK(run({"normal-form", "--n", "2,3", "x1:7"}).code == 2);
  Run bad = run({"simplicity", "--n", "2,0"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("NonPositive") != std::string::npos);
  CHECK(run({"op-eval", "--n", "2,3", "--m", "0", "g(0,1)"}).code == 2);
}

TEST_CASE("reports are deterministic") {
  std::vector<std::string> args{"verify-relations", "--n", "2,4"};
  CHECK(run(args).out == run(args).out);
  std::vector<std::string> all{"verify-all", "--criterion", "8"};
  Run a = run(all), b = run(all);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

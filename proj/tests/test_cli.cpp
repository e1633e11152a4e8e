#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>

#ifndef KPLANAR_CLI
#error "KPLANAR_CLI must point at the cli binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_file = "cli_test_out.txt";
  std::string cmd = std::string(KPLANAR_CLI) + " " + args + " > " + out_file +
                    " 2> cli_test_err.txt";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

}  // namespace

TEST_CASE("generate then verify round trip (exit 0)") {
  auto g = run(
      "generate --family c4free-2planar --rows 6 --cols 6 --wrap --out "
      "cli_t1.json");
  REQUIRE(g.exit_code == 0);
  auto v = run("verify --in cli_t1.json --checks c4,kplanar --expect-k 2");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("verify fails with exit 1 on a triangle checked for C3") {
  std::ofstream f("cli_k3.json");
  f << R"({"metric": null,
          "vertices": [{"id":0,"x":"0","y":"0"},{"id":1,"x":"2","y":"0"},
                       {"id":2,"x":"1","y":"2"}],
          "edges": [{"u":0,"v":1,"bends":[]},{"u":1,"v":2,"bends":[]},
                    {"u":0,"v":2,"bends":[]}]})";
  f.close();
  auto v = run("verify --in cli_k3.json --checks c3");
  CHECK(v.exit_code == 1);
}

TEST_CASE("usage errors exit 2, missing files exit 3") {
  CHECK(run("frobnicate").exit_code == 2);
  CHECK(run("generate --family no-such-family --rows 4 --cols 4").exit_code == 2);
  CHECK(run("verify --in does_not_exist.json").exit_code == 3);
  // structurally invalid drawing file
  std::ofstream f("cli_bad.json");
  f << R"({"metric": null, "vertices": [{"id":0,"x":"0","y":"0"},
          {"id":1,"x":"0","y":"0"}], "edges": []})";
  f.close();
  CHECK(run("verify --in cli_bad.json").exit_code == 3);
}

TEST_CASE("bounds command reproduces the worked example") {
  auto b = run("bounds --k 2 --setting c4free --n 1000 --direction U");
  REQUIRE(b.exit_code == 0);
  CHECK(b.out.find("\"radicand\": \"190125/3136\"") != std::string::npos);
  CHECK(b.out.find("\"bound_decimal\": \"3929\"") != std::string::npos);
}

TEST_CASE("table command renders both formats") {
  auto t = run("table --format text");
  REQUIRE(t.exit_code == 0);
  CHECK(t.out.find("10n/3") != std::string::npos);
  auto j = run("table --format json");
  REQUIRE(j.exit_code == 0);
  CHECK(j.out.find("\"decimal3\": \"3.929\"") != std::string::npos);
}

TEST_CASE("discharge and audit pipelines") {
  REQUIRE(run("generate --family c4free-1planar --rows 8 --cols 8 --wrap "
              "--out cli_t2.json")
              .exit_code == 0);
  auto d = run("discharge --in cli_t2.json --alpha 4/5 --density-formula 3");
  CHECK(d.exit_code == 0);
  CHECK(d.out.find("\"feasible\": true") != std::string::npos);

  auto a = run("audit --in cli_t2.json --mu-class c4free --k 1");
  CHECK(a.exit_code == 0);
  CHECK(a.out.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("sample command is seed-reproducible") {
  REQUIRE(run("generate --family c4free-2planar --rows 4 --cols 4 --wrap "
              "--out cli_t3.json")
              .exit_code == 0);
  auto s1 = run("sample --in cli_t3.json --p 1/2 --trials 500 --seed 11 --csv "
                "cli_t3.csv");
  auto s2 = run("sample --in cli_t3.json --p 1/2 --trials 500 --seed 11");
  REQUIRE(s1.exit_code == 0);
  CHECK(s1.out == s2.out);
  CHECK(s1.out.find("splitmix64-counter") != std::string::npos);
  std::ifstream csv("cli_t3.csv");
  std::string header;
  std::getline(csv, header);
  CHECK(header == "trial,vertices,edges,crossings");
}

//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cli.hpp"

namespace knotsemi {

  namespace {
    struct Result {
      int         code;
      std::string out;
      std::string err;
    };

    Result run(std::vector<std::string> const& args) {
      std::ostringstream out, err;
      int                code = cli::run(args, out, err);
      return {code, out.str(), err.str()};
    }

    std::string temp_file(std::string const& name, std::string const& contents) {
      auto path = std::filesystem::temp_directory_path() / ("knotsemi-test-" + name);
      std::ofstream(path) << contents;
      return path.string();
    }
  }  // namespace

  TEST_CASE("present", "[cli]") {
    auto r = run({"present", "--family", "trivial"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["alphabet"] == 1);
    REQUIRE(j["relations"].empty());
    REQUIRE(j["schema_version"] == 1);

    auto pd = temp_file("hopf.json",
                        R"({"arcs": 2, "crossings": [{"over": 0, "under": [1, 1]},
                                                      {"over": 1, "under": [0, 0]}]})");
    auto h = run({"present", "--pd", pd});
    REQUIRE(h.code == 0);
    REQUIRE(nlohmann::json::parse(h.out)["relations"].size() == 1);
  }

  TEST_CASE("verify", "[cli]") {
    auto r = run({"verify", "--theorem", "torus", "--params", "3", "--max-len", "4", "--pad",
                  "2"});
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["degrees"].size() == 4);
    for (auto const& d : j["degrees"]) {
      REQUIRE(d["verdict"] == "VERIFIED");
    }
    // byte-stable output
    REQUIRE(run({"verify", "--theorem", "torus", "--params", "3", "--max-len", "4", "--pad",
                 "2"})
                .out
            == r.out);
  }

  TEST_CASE("growth and skew", "[cli]") {
    auto r = run({"growth", "--family", "dtw:2,2", "--terms", "6", "--rational"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out.rfind("degree,coefficient\n0,1\n1,4\n2,5\n3,5\n4,5\n5,5\n6,5\n", 0) == 0);
    auto j = nlohmann::json::parse(r.out.substr(r.out.find('{')));
    REQUIRE(j["rational"]["num"] == nlohmann::json({1, 3, 1}));
    REQUIRE(j["rational"]["den"] == nlohmann::json({1, -1}));

    auto counts = temp_file("counts.csv", "degree,count\n1,3\n2,3\n3,3\n4,3\n5,3\n");
    auto s      = run({"skew", "--counts", counts, "--terms", "4"});
    REQUIRE(s.code == 0);
    REQUIRE(s.out == "degree,coefficient\n0,1\n1,-3\n2,6\n3,-12\n4,24\n");
  }

  TEST_CASE("gkdim", "[cli]") {
    auto r = run({"gkdim", "--family", "hopf"});
    REQUIRE(r.code == 0);
    REQUIRE(nlohmann::json::parse(r.out)["gk"] == 2);
    auto c = run({"gkdim", "--family", "conway:2,2", "--max-len", "6"});
    REQUIRE(c.code == 0);
    REQUIRE(nlohmann::json::parse(c.out)["gk"] == 1);
  }

  TEST_CASE("classes and rmove", "[cli]") {
    auto r = run({"classes", "--family", "torus2:3", "--max-len", "3"});
    REQUIRE(r.code == 0);
    REQUIRE(r.out == "degree,count\n1,3\n2,3\n3,3\n");
    auto m = run({"rmove", "--family", "torus2:3", "--move", "r1", "--site", "arc=0",
                  "--max-len", "3"});
    REQUIRE(m.code == 0);
    REQUIRE(nlohmann::json::parse(m.out)["equal_from_2"] == true);
  }

  TEST_CASE("exit codes", "[cli]") {
    // argument errors: no report on standard output
    for (auto const& args : std::vector<std::vector<std::string>>{
             {},
             {"frobnicate"},
             {"present"},
             {"present", "--family", "torus2:0"},
             {"present", "--family", "trivial", "--pd", "x.json"},
             {"verify", "--theorem", "torus", "--params", "3", "--max-len", "0"},
             {"verify", "--theorem", "nope", "--params", "3"},
             {"verify", "--theorem", "dtw", "--params", "3"},
             {"rmove", "--family", "torus2:3", "--move", "r2", "--site", "crossings=0,1"},
             {"growth", "--counts", "/nonexistent/file.csv"}}) {
      auto r = run(args);
      INFO(r.err);
      REQUIRE(r.code == 2);
      REQUIRE(r.out.empty());
    }
    auto b = run({"classes", "--family", "conway:3,3", "--max-len", "8", "--budget", "1000"});
    REQUIRE(b.code == 3);
    REQUIRE(b.out.empty());

    REQUIRE(run({"--help"}).code == 0);
  }

  TEST_CASE("budget from the environment", "[cli]") {
    ::setenv("KNOTGROWTH_BUDGET", "10", 1);
    auto r = run({"classes", "--family", "torus2:3", "--max-len", "3"});
    ::unsetenv("KNOTGROWTH_BUDGET");
    REQUIRE(r.code == 3);
    ::setenv("KNOTGROWTH_BUDGET", "ten", 1);
    auto bad = run({"classes", "--family", "torus2:3", "--max-len", "3"});
    ::unsetenv("KNOTGROWTH_BUDGET");
    REQUIRE(bad.code == 2);
  }

  TEST_CASE("verify exits 1 when a degree is unresolved", "[cli]") {
    // T(2,4) is a link: its semigroup is SAS(Z_4,Z_4), strictly larger than
    // AS(Z_4,Z_4) from degree 2 on.
    auto r = run({"verify", "--theorem", "torus", "--params", "4", "--max-len", "3", "--pad",
                  "2"});
    REQUIRE(r.code == 1);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE_FALSE(j["all_verified"].get<bool>());
    REQUIRE(j["degrees"][0]["verdict"] == "VERIFIED");
    REQUIRE(j["degrees"][1]["verdict"] == "UNRESOLVED");
    REQUIRE(j["degrees"][1]["oracle"] == 6);
    REQUIRE(j["degrees"][1]["as"] == 4);
  }

}  // namespace knotsemi

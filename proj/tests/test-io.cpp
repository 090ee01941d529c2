//
// knotsemi - knot semigroups, alternating sum semigroups and growth
//

#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "knotsemi/errors.hpp"
#include "knotsemi/io.hpp"

namespace knotsemi {

  TEST_CASE("planar diagram JSON", "[io]") {
    auto d = diagram_from_pd_json(
        R"({"arcs": 3, "crossings": [{"over": 0, "under": [2, 1]},
                                      {"over": 1, "under": [0, 2]},
                                      {"over": 2, "under": [1, 0]}]})");
    REQUIRE(d == build_family(family::Torus2{3}));
    REQUIRE(diagram_from_pd_json(to_json(d).dump()) == d);

    REQUIRE_THROWS_AS(diagram_from_pd_json("{"), ParseError);
    REQUIRE_THROWS_AS(diagram_from_pd_json(R"({"arcs": 2})"), ParseError);
    REQUIRE_THROWS_AS(diagram_from_pd_json(R"({"arcs": 0, "crossings": []})"), ParseError);
    REQUIRE_THROWS_AS(
        diagram_from_pd_json(R"({"arcs": 2, "crossings": [{"over": 2, "under": [0, 0]}]})"),
        ParseError);
    REQUIRE_THROWS_AS(
        diagram_from_pd_json(R"({"arcs": 2, "crossings": [{"over": 1, "under": [0, -1]}]})"),
        ParseError);
    REQUIRE_THROWS_AS(
        diagram_from_pd_json(R"({"arcs": 2, "crossings": [{"over": 1, "under": [0]}]})"),
        ParseError);
    REQUIRE_THROWS_AS(
        diagram_from_pd_json(R"({"arcs": 2, "crossings": [{"over": 1, "under": [0, 1]}]})"),
        ParseError);
  }

  TEST_CASE("presentation JSON", "[io]") {
    auto j = to_json(presentation_from_diagram(build_family(family::Trivial{})));
    REQUIRE(j["alphabet"] == 1);
    REQUIRE(j["relations"].empty());
    REQUIRE(j["schema_version"] == 1);
    auto h = to_json(presentation_from_diagram(build_family(family::Hopf{})));
    REQUIRE(h["relations"].dump() == "[[[0,1],[1,0]]]");
  }

  TEST_CASE("report JSON", "[io]") {
    auto r = to_json(verify_theorem(torus_theorem(3), 2, 1));
    REQUIRE(r["homomorphism"] == true);
    REQUIRE(r["degrees"][0]["d"] == 1);
    REQUIRE(r["degrees"][0]["oracle"] == 3);
    REQUIRE(r["degrees"][0]["as"] == 3);
    REQUIRE(r["degrees"][1]["verdict"] == "VERIFIED");
    REQUIRE(r["params"]["max_len"] == 2);
    REQUIRE(to_json(RationalForm{{1, 2}, {1, -1}}).dump() == R"({"den":[1,-1],"num":[1,2]})");
    GkEstimate e;
    e.kind = GkEstimate::Kind::infinite;
    REQUIRE(to_json(e)["gk"] == "infinity");
  }

  TEST_CASE("counts CSV", "[io]") {
    REQUIRE(parse_counts("degree,count\n1,3\n2,3\n3,3\n") == std::vector<std::uint64_t>{3, 3, 3});
    REQUIRE(parse_counts("0,1\n1,2\r\n2,4\n\n") == std::vector<std::uint64_t>{2, 4});
    REQUIRE_THROWS_AS(parse_counts("1,2\n3,4\n"), ParseError);
    REQUIRE_THROWS_AS(parse_counts("0,2\n1,2\n"), ParseError);
    REQUIRE_THROWS_AS(parse_counts("degree,count\n"), ParseError);
    REQUIRE_THROWS_AS(parse_counts("1,2\nx,4\n"), ParseError);

    std::ostringstream os;
    std::vector<std::uint64_t> c{2, 4};
    write_csv(os, std::span<std::uint64_t const>(c), "count", 1);
    REQUIRE(os.str() == "degree,count\n1,2\n2,4\n");
    REQUIRE(parse_counts(os.str()) == c);
  }

}  // namespace knotsemi

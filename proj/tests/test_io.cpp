#include "doctest.h"

#include "delzant/fixtures.hpp"
#include "delzant/io.hpp"

using namespace delzant;

TEST_CASE("fixture data") {
  const auto p = fixtures::blown_up_hirzebruch();
  CHECK(p.normals() == std::vector<IntVector>{{1, 0}, {0, 1}, {1, -1}, {-1, 1}, {1, -2}, {0, -1}});
  CHECK(p.offsets() == RationalVector{0, 0, -1, -1, -3, -3});
  const auto q = fixtures::iterated_blowup_plane(3);
  CHECK(q.normals() == std::vector<IntVector>{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {2, -1}});
  CHECK(q.offsets() == RationalVector{0, 0, -2, -4, -4, -2, Rational(-3, 2)});
  CHECK(fixtures::resolve("example-3.7") == p);
  CHECK(fixtures::resolve("example-3.8:3") == q);
  CHECK(fixtures::resolve("cpn:2:3") == fixtures::projective_space(2, 3));
  CHECK(fixtures::resolve("cpn:2") == fixtures::projective_space(2, 1));
  CHECK(fixtures::resolve("hirzebruch:2") == fixtures::hirzebruch(2));
  CHECK(fixtures::resolve("cp1xcp1") == fixtures::product_of_lines());
  CHECK_FALSE(fixtures::resolve("nonsense").has_value());
  CHECK_THROWS_AS(fixtures::resolve("example-3.8:0"), Error);
  CHECK_THROWS_AS(fixtures::resolve("example-3.8:x"), Error);
  CHECK_THROWS_AS(fixtures::resolve("cpn:0:1"), Error);
}

TEST_CASE("rational parsing") {
  CHECK(io::parse_rational(io::Json("3/6")) == Rational(1, 2));
  CHECK(io::parse_rational(io::Json(" -4 / 3 ")) == Rational(-4, 3));
  CHECK(io::parse_rational(io::Json(7)) == 7);
  CHECK(io::parse_rational(io::Json("+2")) == 2);
  CHECK_THROWS_AS(io::parse_rational(io::Json("1/0")), Error);
  CHECK_THROWS_AS(io::parse_rational(io::Json("1.5")), Error);
  CHECK_THROWS_AS(io::parse_rational(io::Json(1.5)), Error);
  CHECK_THROWS_AS(io::parse_integer(io::Json("1/2")), Error);
  CHECK(io::format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(io::format_rational(Rational(4)) == "4");
}

TEST_CASE("polytope JSON round trip is byte-stable") {
  for (const auto& p : {fixtures::blown_up_hirzebruch(), fixtures::iterated_blowup_plane(5),
                        fixtures::projective_space(3, 2)}) {
    const std::string once = io::polytope_to_json(p).dump(2);
    const auto back = io::polytope_from_json(once);
    CHECK(back == p);
    CHECK(io::polytope_to_json(back).dump(2) == once);
  }
}

TEST_CASE("malformed polytope documents") {
  for (const char* doc : {"", "[]", "{\"dim\": 2}", "{\"dim\": -1, \"normals\": [], \"offsets\": []}",
                          "{\"dim\": 2, \"normals\": [[2, 0]], \"offsets\": [0]}",
                          "{\"dim\": 2, \"normals\": [[1, 0]], \"offsets\": [\"a\"]}",
                          "{\"dim\": 2, \"normals\": [1], \"offsets\": [0]}"}) {
    try {
      io::polytope_from_json(doc);
      FAIL("accepted: " << doc);
    } catch (const Error& e) {
      CHECK(e.code() == Errc::parse);
    }
  }
}

TEST_CASE("analyze report") {
  const auto j = io::analyze(fixtures::blown_up_hirzebruch());
  CHECK(j["delzant"] == true);
  CHECK(j["smooth"] == true);
  CHECK(j["complete"] == "complete");
  CHECK(j["strictly_convex"] == true);
  CHECK(j["lattice_point_count"] == 10);
  CHECK(j["vertices"].size() == 6);
  const auto k = io::analyze(HalfspacePolytope(2, {{1, 0}, {1, 2}, {-1, 0}, {0, -1}}, {0, 0, -4, -4}));
  CHECK(k["delzant"] == false);
  CHECK(k["smooth"] == false);
  CHECK(k["strictly_convex"].is_null());
  const auto r = io::analyze(fixtures::iterated_blowup_plane(2));
  CHECK(r["support_scale"] == "3");
  CHECK(r["strictly_convex"] == true);
}

TEST_CASE("width JSON fields") {
  const auto j = io::width_to_json(width_report(fixtures::blown_up_hirzebruch()));
  CHECK(j["paper_bound_pi"] == "6");
  CHECK(j["radius_sq"] == "6");
  CHECK(j["lu_lambda_pi"] == "8");
  CHECK(j["fano"] == false);
  CHECK(j["lu_gamma_pi"].is_null());
  CHECK(j["min_bound_pi"] == "6");
  CHECK(j["witnesses"]["lu_lambda"] == io::Json::parse("[0,1,0,1,1,0]"));
}

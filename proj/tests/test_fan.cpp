#include "doctest.h"

#include "delzant/fan.hpp"
#include "delzant/fixtures.hpp"

using namespace delzant;

namespace {

Fan square_fan() {
  return Fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
}

}  // namespace

TEST_CASE("fan validation") {
  CHECK_THROWS_AS(Fan(2, {{2, 0}, {0, 1}}, {{0, 1}}), Error);
  CHECK_THROWS_AS(Fan(2, {{1, 0}, {1, 0}}, {{0, 1}}), Error);
  CHECK_THROWS_AS(Fan(2, {{1, 0}, {-1, 0}}, {{0, 1}}), Error);
  CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}), Error);
  // Overlapping 2D cones.
  CHECK_THROWS_AS(Fan(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {0, 2}}), Error);
  const Fan f(2, {{1, 0}, {0, 1}}, {{1, 0}});
  CHECK(f.max_cones().front() == std::vector<std::size_t>{0, 1});
}

TEST_CASE("smoothness") {
  CHECK(is_smooth(square_fan()));
  CHECK_FALSE(is_smooth(Fan(2, {{1, 0}, {1, 2}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})));
  CHECK_THROWS_AS(is_smooth(Fan(2, {{1, 0}, {0, 1}}, {{0}, {1}})), Error);
}

TEST_CASE("completeness") {
  CHECK(is_complete(square_fan()) == Completeness::complete);
  CHECK(is_complete(Fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}})) ==
        Completeness::incomplete);
  CHECK(is_complete(Fan(1, {{1}, {-1}}, {{0}, {1}})) == Completeness::complete);
  CHECK(is_complete(Fan(1, {{1}}, {{0}})) == Completeness::incomplete);
  CHECK(is_complete(normal_fan(fixtures::projective_space(3))) == Completeness::complete);
  CHECK(is_complete(Fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2}})) == Completeness::unverified);
}

TEST_CASE("normal fans of the examples") {
  for (const auto& p : {fixtures::blown_up_hirzebruch(), fixtures::iterated_blowup_plane(1),
                        fixtures::projective_space(2), fixtures::hirzebruch(2), fixtures::product_of_lines()}) {
    const Fan f = normal_fan(p);
    CHECK(f.generators() == p.normals());
    CHECK(f.max_cones().size() == enumerate_vertices(p).size());
    CHECK(is_smooth(f));
    CHECK(is_complete(f) == Completeness::complete);
  }
  const HalfspacePolytope bad(2, {{1, 0}, {1, 2}, {-1, 0}, {0, -1}}, {0, 0, -4, -4});
  CHECK_THROWS_AS(normal_fan(bad), Error);
  CHECK_FALSE(is_smooth(normal_fan_of_simple(bad)));
}

TEST_CASE("linear pieces are the vertices") {
  const auto p = fixtures::blown_up_hirzebruch();
  const Fan f = normal_fan(p);
  const auto g = support_function(p);
  const auto vs = enumerate_vertices(p);
  for (std::size_t k = 0; k < f.max_cones().size(); ++k) {
    const auto it = std::find_if(vs.begin(), vs.end(), [&](const Vertex& v) { return v.active == f.max_cones()[k]; });
    REQUIRE(it != vs.end());
    CHECK(linear_piece(f, g, k) == it->point);
  }
  CHECK_THROWS_AS(support_function(fixtures::iterated_blowup_plane(2)), Error);
}

TEST_CASE("support function round trip") {
  const auto p = fixtures::blown_up_hirzebruch();
  const Fan f = normal_fan(p);
  CHECK(polytope_from_support(f, support_function(p)) == p);
}

TEST_CASE("strict convexity") {
  const Fan f = square_fan();
  CHECK(is_strictly_convex(f, {{0, 0, -2, -3}}));
  // Degenerate: x >= 0, x <= 0 collapses two pieces.
  CHECK_FALSE(is_strictly_convex(f, {{0, 0, 0, -1}}));
  // Empty polytope: g is not the minimum of its pieces.
  CHECK_FALSE(is_strictly_convex(f, {{0, 0, 1, 1}}));
  for (const auto& p : {fixtures::blown_up_hirzebruch(), scale(fixtures::iterated_blowup_plane(1), 2),
                        fixtures::hirzebruch(2)})
    CHECK(is_strictly_convex(normal_fan(p), support_function(p)));
  CHECK_THROWS_AS(is_strictly_convex(Fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}}),
                                     {{0, 0, -1, -1}}),
                  Error);
}

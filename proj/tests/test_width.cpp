#include "doctest.h"

#include "delzant/fixtures.hpp"
#include "delzant/width.hpp"
#include "oracles.hpp"

using namespace delzant;

namespace {

// max_k (J_k)_j is the largest j-th coordinate of the polytope moved to the
// vertex, which is attained at a vertex.
IntVector axis_maxima_oracle(const HalfspacePolytope& p, const Vertex& v) {
  const auto [map, np] = normalize_at_vertex(p, v);
  const auto vs = oracle::vertices(np);
  IntVector out(p.dim(), 0);
  for (const auto& w : vs)
    for (std::size_t k = 0; k < p.dim(); ++k) out[k] = std::max(out[k], oracle::floor_q(w[k]));
  return out;
}

}  // namespace

TEST_CASE("cylinder bound on small embeddings") {
  const auto b = paper_bound(make_embedding({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(b.coefficient_pi == 2);
  CHECK(b.radius_sq == 2);
  CHECK(b.axis_maxima == IntVector{1, 1});
  const auto c = paper_bound(make_embedding({{0, 0}, {3, 0}, {0, 1}, {2, 1}}));
  CHECK(c.coefficient_pi == 2);
  CHECK(c.axis == 1);
}

TEST_CASE("cylinder bound axis maxima match the vertex oracle") {
  for (const auto& p : {fixtures::blown_up_hirzebruch(), fixtures::hirzebruch(3), fixtures::projective_space(3, 2),
                        scale(fixtures::iterated_blowup_plane(3), 4)}) {
    const auto vs = enumerate_vertices(p);
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (!is_integral(vs[i].point)) continue;
      const auto r = width_report(p, i);
      CHECK(r.paper.axis_maxima == axis_maxima_oracle(p, vs[i]));
    }
  }
}

TEST_CASE("blown-up Hirzebruch bounds") {
  const auto p = fixtures::blown_up_hirzebruch();
  const auto r = width_report(p);
  CHECK(r.paper.coefficient_pi == 6);
  CHECK(r.paper.radius_sq == 6);
  CHECK(r.paper.axis_maxima == IntVector{4, 3});
  CHECK(r.lambda.value == Rational(4));
  CHECK(r.lambda.coefficient_pi == Rational(8));
  CHECK(r.lambda.witness == IntVector{0, 1, 0, 1, 1, 0});
  CHECK_FALSE(r.fano.has_value());
  CHECK_FALSE(r.gamma.applicable);
  CHECK(r.min_bound_pi == 6);
}

TEST_CASE("iterated blow-up: scaling pipeline and Lambda") {
  for (unsigned m : {1u, 2u, 5u, 10u}) {
    const auto p = fixtures::iterated_blowup_plane(m);
    const auto r = width_report(p);
    CHECK(r.denominator_scale == offset_denominator_lcm(p));
    CHECK(r.paper.coefficient_pi == 8);
    // Clearing with m + 1 instead of the minimal lcm gives the same bound.
    CHECK(width_report(scale(p, m + 1)).paper.coefficient_pi / (m + 1) == 8);
    CHECK(r.paper.radius_sq == 8);
    CHECK(r.lambda.coefficient_pi == 2 * (6 + Rational(2 * m) / (m + 1)));
    CHECK_FALSE(r.fano.has_value());
  }
}

TEST_CASE("Lambda agrees with the brute-force relation search") {
  for (const auto& p : {fixtures::blown_up_hirzebruch(), fixtures::iterated_blowup_plane(2), fixtures::hirzebruch(1),
                        fixtures::hirzebruch(2), fixtures::projective_space(2, 3), fixtures::product_of_lines(),
                        fixtures::projective_space(3)}) {
    const auto expect = oracle::brute_lambda(p, static_cast<unsigned>(p.dim() + 1));
    const auto got = lu_lambda(p);
    REQUIRE(expect.has_value() == got.value.has_value());
    if (expect) CHECK(*got.value == *expect);
  }
}

TEST_CASE("Fano certificates") {
  for (unsigned n : {1u, 2u, 3u}) {
    const auto p = fixtures::projective_space(n);
    const auto cert = fano_check(p);
    REQUIRE(cert.has_value());
    CHECK(cert->r == n + 1);
    for (const auto& x : cert->m) CHECK(x == Rational(-1, n + 1));
    CHECK(verify_fano_certificate(p, *cert));
    auto tampered = *cert;
    tampered.r += 1;
    CHECK_FALSE(verify_fano_certificate(p, tampered));
  }
  const HalfspacePolytope square(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {0, 0, -1, -1});
  const auto sq = fano_check(square);
  REQUIRE(sq.has_value());
  CHECK(sq->r == 2);
  CHECK(sq->m == RationalVector{Rational(-1, 2), Rational(-1, 2)});
  // Lopsided rectangle: not proportional to the anticanonical class.
  CHECK_FALSE(fano_check(HalfspacePolytope(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {0, 0, -1, -2})).has_value());
  CHECK_FALSE(fano_check(fixtures::hirzebruch(2)).has_value());
}

TEST_CASE("gamma") {
  for (unsigned n : {1u, 2u, 3u}) {
    const auto g = lu_gamma(fixtures::projective_space(n));
    CHECK(g.applicable);
    CHECK(g.search_bound == 2 * (n + 1));
    CHECK(g.coefficient_pi == Rational(2));
  }
  const auto g = lu_gamma(fixtures::blown_up_hirzebruch());
  CHECK_FALSE(g.applicable);
  CHECK_FALSE(g.value.has_value());
  // The ungated search still runs.
  CHECK(gamma_search(fixtures::blown_up_hirzebruch(), 6).value.has_value());
}

TEST_CASE("width report rejects non-Delzant input and bad vertices") {
  const HalfspacePolytope bad(2, {{1, 0}, {1, 2}, {-1, 0}, {0, -1}}, {0, 0, -4, -4});
  CHECK_THROWS_AS(width_report(bad), Error);
  CHECK_THROWS_AS(width_report(fixtures::projective_space(2), 7), Error);
}

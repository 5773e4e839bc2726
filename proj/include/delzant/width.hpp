#pragma once

// Upper bounds on the Gromov width of a toric manifold with moment polytope
// P = { x : <x, u_i> >= lambda_i }, all stored exactly as rational multiples
// of pi:
//
//   * the cylinder bound 2 pi min_j max_k (J_k)_j from the monomial embedding
//     of the chart at a vertex,
//   * Lambda(P) = 2 pi max { -sum lambda_i a_i : a >= 0, sum a_i u_i = 0,
//                            1 <= sum a_i <= n + 1 },
//   * gamma(P) = 2 pi inf { -sum lambda_i a_i > 0 : a >= 0, sum a_i u_i = 0 },
//     only when P admits a Fano certificate.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "delzant/embedding.hpp"
#include "delzant/polytope.hpp"

namespace delzant {

struct PaperBound {
  Rational coefficient_pi;  // 2 min_j max_k (J_k)_j
  Rational radius_sq;       // balls of larger radius must meet the divisor
  std::size_t axis;         // smallest j attaining the minimum
  IntVector axis_maxima;    // max_k (J_k)_j for every j
};

PaperBound paper_bound(const MonomialEmbedding& e);

struct LambdaResult {
  std::optional<Rational> value;           // max of -sum lambda_i a_i; empty when no relation exists
  std::optional<Rational> coefficient_pi;  // 2 * value
  IntVector witness;                       // lexicographically smallest maximiser
  std::size_t maximizers = 0;
};

LambdaResult lu_lambda(const HalfspacePolytope& p);

struct FanoCertificate {
  Rational r;
  RationalVector m;
  std::vector<int> signs;  // r (lambda_i + <m, u_i>) for every facet
};

/// Searches for r > 0 and m with r (lambda_i + <m, u_i>) = +-1 for all i and
/// Int(r (m + P)) meeting Z^n only in the origin.
std::optional<FanoCertificate> fano_check(const HalfspacePolytope& p);

/// Re-checks every condition of a certificate from scratch.
bool verify_fano_certificate(const HalfspacePolytope& p, const FanoCertificate& cert);

struct GammaResult {
  bool applicable = false;  // a Fano certificate exists
  unsigned search_bound = 0;
  std::optional<Rational> value;
  std::optional<Rational> coefficient_pi;
  IntVector witness;
};

unsigned default_gamma_search_bound(std::size_t dim);

/// Minimum positive -sum lambda_i a_i over relations with sum a_i <= bound
/// (default 2 (n + 1)). The search is exhaustive only up to that bound.
GammaResult lu_gamma(const HalfspacePolytope& p, unsigned search_bound = 0);
/// Same search without the Fano gate; for diagnostics.
GammaResult gamma_search(const HalfspacePolytope& p, unsigned search_bound);

struct WidthReport {
  std::size_t vertex = 0;
  Vertex vertex_data;
  Integer denominator_scale;  // lcm of offset denominators; bounds are rescaled by it
  MonomialEmbedding embedding;  // of the scaled polytope at the scaled vertex
  PaperBound paper;             // already divided by denominator_scale
  LambdaResult lambda;
  std::optional<FanoCertificate> fano;
  GammaResult gamma;
  Rational min_bound_pi;
  std::string min_source;
};

/// Combines all bounds for a Delzant polytope at the given vertex (index into
/// enumerate_vertices).
WidthReport width_report(const HalfspacePolytope& p, std::size_t vertex = 0);

}  // namespace delzant

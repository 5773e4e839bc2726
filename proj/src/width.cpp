#include "delzant/width.hpp"

#include <algorithm>

#include "combinations.hpp"

namespace delzant {

PaperBound paper_bound(const MonomialEmbedding& e) {
  if (e.exponents.empty()) throw Error(Errc::invalid_argument, "paper_bound: empty embedding");
  const std::size_t n = e.dim();
  PaperBound b;
  b.axis_maxima.assign(n, 0);
  for (const auto& j : e.exponents)
    for (std::size_t k = 0; k < n; ++k) {
      if (j[k] < 0) throw Error(Errc::invalid_argument, "paper_bound: negative exponent");
      b.axis_maxima[k] = std::max(b.axis_maxima[k], j[k]);
    }
  b.axis = static_cast<std::size_t>(std::min_element(b.axis_maxima.begin(), b.axis_maxima.end()) -
                                    b.axis_maxima.begin());
  b.coefficient_pi = 2 * Rational(b.axis_maxima[b.axis]);
  b.radius_sq = b.coefficient_pi;
  return b;
}

namespace {

bool is_relation(const HalfspacePolytope& p, std::span<const unsigned> a) {
  for (std::size_t c = 0; c < p.dim(); ++c) {
    Integer s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i]) s += a[i] * p.normal(i)[c];
    if (s != 0) return false;
  }
  return true;
}

Rational relation_value(const HalfspacePolytope& p, std::span<const unsigned> a) {
  Rational v = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i]) v -= a[i] * p.offset(i);
  return v;
}

IntVector to_int_vector(std::span<const unsigned> a) {
  IntVector out;
  for (auto x : a) out.emplace_back(static_cast<unsigned long>(x));
  return out;
}

}  // namespace

LambdaResult lu_lambda(const HalfspacePolytope& p) {
  LambdaResult res;
  const auto bound = static_cast<unsigned>(p.dim() + 1);
  // Lexicographic order plus strict improvement keeps the smallest maximiser.
  for_each_bounded_composition(p.facet_count(), bound, [&](std::span<const unsigned> a) {
    unsigned total = 0;
    for (auto x : a) total += x;
    if (total == 0 || !is_relation(p, a)) return true;
    const Rational v = relation_value(p, a);
    if (!res.value || v > *res.value) {
      res.value = v;
      res.witness = to_int_vector(a);
      res.maximizers = 1;
    } else if (v == *res.value) {
      ++res.maximizers;
    }
    return true;
  });
  if (res.value) res.coefficient_pi = 2 * *res.value;
  return res;
}

std::optional<FanoCertificate> fano_check(const HalfspacePolytope& p) {
  const std::size_t n = p.dim();
  const std::size_t d = p.facet_count();
  // Unknowns (y, r) with y = r m; equations <y, u_i> + r lambda_i = s_i.
  auto row = [&](std::size_t i) {
    RationalVector r(n + 1);
    for (std::size_t c = 0; c < n; ++c) r[c] = p.normal(i)[c];
    r[n] = p.offset(i);
    return r;
  };
  // Any full sign pattern is determined by its restriction to n + 1
  // independent rows, so searching those restrictions is exhaustive.
  std::vector<std::size_t> basis;
  for (std::size_t i = 0; i < d && basis.size() < n + 1; ++i) {
    RationalMatrix m(basis.size() + 1, n + 1);
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const auto r = row(basis[k]);
      for (std::size_t c = 0; c <= n; ++c) m(k, c) = r[c];
    }
    const auto r = row(i);
    for (std::size_t c = 0; c <= n; ++c) m(basis.size(), c) = r[c];
    if (rank(m) == basis.size() + 1) basis.push_back(i);
  }
  if (basis.size() < n + 1) return std::nullopt;

  RationalMatrix sys(n + 1, n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto r = row(basis[k]);
    for (std::size_t c = 0; c <= n; ++c) sys(k, c) = r[c];
  }
  // Pattern bit k set means sign -1 on basis row k; start from all -1.
  const std::size_t patterns = std::size_t{1} << (n + 1);
  for (std::size_t code = 0; code < patterns; ++code) {
    const std::size_t bits = (patterns - 1) ^ code;
    RationalVector rhs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) rhs[k] = (bits >> k) & 1U ? -1 : 1;
    const auto sol = solve_rational(sys, rhs);
    if (!sol) continue;
    const Rational r = (*sol)[n];
    if (r <= 0) continue;
    FanoCertificate cert{r, {}, {}};
    const RationalVector y(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(n));
    for (const auto& yc : y) cert.m.push_back(yc / r);
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      const Rational s = dot(std::span<const Rational>(y), std::span<const Integer>(p.normal(i))) + r * p.offset(i);
      if (s == 1)
        cert.signs.push_back(1);
      else if (s == -1)
        cert.signs.push_back(-1);
      else
        ok = false;
    }
    if (ok && verify_fano_certificate(p, cert)) return cert;
  }
  return std::nullopt;
}

bool verify_fano_certificate(const HalfspacePolytope& p, const FanoCertificate& cert) {
  if (cert.r <= 0 || cert.m.size() != p.dim() || cert.signs.size() != p.facet_count()) return false;
  RationalVector offsets;
  for (std::size_t i = 0; i < p.facet_count(); ++i) {
    const Rational s =
        cert.r * (p.offset(i) + dot(std::span<const Rational>(cert.m), std::span<const Integer>(p.normal(i))));
    if (s != cert.signs[i] || (s != 1 && s != -1)) return false;
    offsets.push_back(s);
  }
  // r (m + P) = { z : <z, u_i> >= r (lambda_i + <m, u_i>) }.
  const HalfspacePolytope dilated(p.dim(), p.normals(), std::move(offsets));
  std::vector<IntVector> interior;
  for (const auto& z : lattice_points(dilated))
    if (dilated.contains_in_interior(z)) interior.push_back(z);
  return interior.size() == 1 && std::all_of(interior[0].begin(), interior[0].end(),
                                             [](const Integer& x) { return x == 0; });
}

unsigned default_gamma_search_bound(std::size_t dim) { return static_cast<unsigned>(2 * (dim + 1)); }

GammaResult gamma_search(const HalfspacePolytope& p, unsigned search_bound) {
  GammaResult res;
  res.search_bound = search_bound ? search_bound : default_gamma_search_bound(p.dim());
  for_each_bounded_composition(p.facet_count(), res.search_bound, [&](std::span<const unsigned> a) {
    if (!is_relation(p, a)) return true;
    const Rational v = relation_value(p, a);
    if (v > 0 && (!res.value || v < *res.value)) {
      res.value = v;
      res.witness = to_int_vector(a);
    }
    return true;
  });
  if (res.value) res.coefficient_pi = 2 * *res.value;
  return res;
}

GammaResult lu_gamma(const HalfspacePolytope& p, unsigned search_bound) {
  if (!fano_check(p)) {
    GammaResult res;
    res.search_bound = search_bound ? search_bound : default_gamma_search_bound(p.dim());
    return res;
  }
  GammaResult res = gamma_search(p, search_bound);
  res.applicable = true;
  return res;
}

WidthReport width_report(const HalfspacePolytope& p, std::size_t vertex) {
  const auto vertices = enumerate_vertices(p);
  if (vertex >= vertices.size())
    throw Error(Errc::invalid_argument, "vertex index " + std::to_string(vertex) + " out of range");
  if (!is_delzant(p)) throw Error(Errc::not_delzant, "width_report: polytope is not Delzant");

  WidthReport rep;
  rep.vertex = vertex;
  rep.vertex_data = vertices[vertex];
  rep.denominator_scale = offset_denominator_lcm(p);

  // Clear denominators, bound the integral polytope, then rescale.
  const Rational q(rep.denominator_scale);
  const HalfspacePolytope scaled = scale(p, q);
  Vertex scaled_vertex = rep.vertex_data;
  for (auto& x : scaled_vertex.point) x *= q;
  rep.embedding = sections_by_polytope(scaled, scaled_vertex);
  rep.paper = paper_bound(rep.embedding);
  rep.paper.coefficient_pi /= q;
  rep.paper.radius_sq /= q;

  rep.lambda = lu_lambda(p);
  rep.fano = fano_check(p);
  rep.gamma = rep.fano ? gamma_search(p, 0) : GammaResult{};
  rep.gamma.applicable = rep.fano.has_value();
  if (!rep.fano) rep.gamma.search_bound = default_gamma_search_bound(p.dim());

  rep.min_bound_pi = rep.paper.coefficient_pi;
  rep.min_source = "paper_bound";
  if (rep.lambda.coefficient_pi && *rep.lambda.coefficient_pi < rep.min_bound_pi) {
    rep.min_bound_pi = *rep.lambda.coefficient_pi;
    rep.min_source = "lu_lambda";
  }
  if (rep.gamma.coefficient_pi && *rep.gamma.coefficient_pi < rep.min_bound_pi) {
    rep.min_bound_pi = *rep.gamma.coefficient_pi;
    rep.min_source = "lu_gamma";
  }
  return rep;
}

}  // namespace delzant

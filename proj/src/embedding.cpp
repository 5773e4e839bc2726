#include "delzant/embedding.hpp"

#include <algorithm>

namespace delzant {

MonomialEmbedding make_embedding(std::vector<IntVector> exponents, std::optional<std::size_t> cone) {
  if (exponents.empty()) throw Error(Errc::invalid_argument, "embedding needs at least one exponent");
  const std::size_t n = exponents.front().size();
  for (const auto& j : exponents) {
    if (j.size() != n) throw Error(Errc::dimension_mismatch, "exponents of unequal length");
    if (std::any_of(j.begin(), j.end(), [](const Integer& x) { return x < 0; }))
      throw Error(Errc::invalid_argument, "negative exponent " + to_string(j));
  }
  std::sort(exponents.begin(), exponents.end());
  if (std::adjacent_find(exponents.begin(), exponents.end()) != exponents.end())
    throw Error(Errc::invalid_argument, "duplicate exponent");
  return MonomialEmbedding{std::move(exponents), cone};
}

IntVector twist_exponents(const ChartData& c, const SupportFunction& g) {
  if (g.values.size() != c.generator_count())
    throw Error(Errc::dimension_mismatch, "twist_exponents: support function length mismatch");
  IntVector out(c.complement.size());
  for (std::size_t l = 0; l < c.complement.size(); ++l) {
    Integer s = g.values[c.complement[l]];
    for (std::size_t k = 0; k < c.dim(); ++k) s -= c.v(k, l) * g.values[c.cone_indices[k]];
    out[l] = s;
  }
  return out;
}

IntVector section_exponents(const ChartData& c, const SupportFunction& g, std::span<const Integer> x) {
  if (x.size() != c.dim()) throw Error(Errc::dimension_mismatch, "section_exponents: wrong length");
  if (g.values.size() != c.generator_count())
    throw Error(Errc::dimension_mismatch, "section_exponents: support function length mismatch");
  IntVector full(c.generator_count());
  for (std::size_t k = 0; k < c.dim(); ++k) full[c.cone_indices[k]] = x[k];
  // x_l + g(u_l) = sum_k v_{lk} (x_k + g(u_{j_k})).
  for (std::size_t l = 0; l < c.complement.size(); ++l) {
    Integer s = -g.values[c.complement[l]];
    for (std::size_t k = 0; k < c.dim(); ++k) s += c.v(k, l) * (x[k] + g.values[c.cone_indices[k]]);
    full[c.complement[l]] = s;
  }
  return full;
}

MonomialEmbedding sections_by_conditions(const Fan& f, const SupportFunction& g, std::size_t cone) {
  if (!is_strictly_convex(f, g))
    throw Error(Errc::not_strictly_convex, "support function is not strictly convex");
  const ChartData chart = chart_for_cone(f, cone);
  const HalfspacePolytope delta = polytope_from_support(f, g);

  Vertex corner{linear_piece(f, g, cone), {}};
  for (std::size_t i = 0; i < delta.facet_count(); ++i)
    if (delta.slack(corner.point, i) == 0) corner.active.push_back(i);
  const auto normalized = normalize_at_vertex(delta, corner).second;

  const std::size_t n = f.dim();
  IntVector hi(n);
  for (const auto& v : enumerate_vertices(normalized))
    for (std::size_t k = 0; k < n; ++k) {
      Integer fl;
      mpz_fdiv_q(fl.get_mpz_t(), v.point[k].get_num_mpz_t(), v.point[k].get_den_mpz_t());
      hi[k] = std::max(hi[k], fl);
    }

  std::vector<IntVector> found;
  IntVector x(n);
  while (true) {
    const IntVector full = section_exponents(chart, g, x);
    if (std::all_of(full.begin(), full.end(), [](const Integer& e) { return e >= 0; })) found.push_back(x);
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (x[k] < hi[k]) {
        ++x[k];
        break;
      }
      x[k] = 0;
      if (k == 0) return make_embedding(std::move(found), cone);
    }
  }
}

MonomialEmbedding sections_by_polytope(const HalfspacePolytope& p, const Vertex& v) {
  if (!is_integral(v.point))
    throw Error(Errc::not_integral, "sections_by_polytope: vertex is not a lattice point");
  const auto normalized = normalize_at_vertex(p, v).second;
  return make_embedding(lattice_points(normalized));
}

ComplexVector kodaira_eval(const MonomialEmbedding& e, std::span<const Complex> xi) {
  if (e.exponents.empty()) throw Error(Errc::invalid_argument, "kodaira_eval: empty embedding");
  if (xi.size() != e.dim()) throw Error(Errc::dimension_mismatch, "kodaira_eval: wrong input length");
  ComplexVector out;
  out.reserve(e.size());
  bool all_zero = true;
  for (const auto& j : e.exponents) {
    Complex w = 1.0;
    for (std::size_t k = 0; k < j.size(); ++k) w *= int_pow(xi[k], j[k]);
    all_zero = all_zero && w == 0.0;
    out.push_back(w);
  }
  if (all_zero) throw Error(Errc::numeric_domain, "kodaira_eval: every coordinate vanishes");
  return out;
}

}  // namespace delzant

#include "delzant/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "combinations.hpp"

namespace delzant {

HalfspacePolytope::HalfspacePolytope(std::size_t dim, std::vector<IntVector> normals, RationalVector offsets)
    : dim_(dim), normals_(std::move(normals)), offsets_(std::move(offsets)) {
  if (dim_ == 0) throw Error(Errc::invalid_argument, "polytope dimension must be positive");
  if (normals_.size() != offsets_.size())
    throw Error(Errc::dimension_mismatch, "normals and offsets differ in count");
  std::set<std::pair<IntVector, Rational>> seen;
  for (std::size_t i = 0; i < normals_.size(); ++i) {
    // mpq_class(p, q) is not reduced; comparisons assume canonical form.
    if (offsets_[i].get_den() == 0) throw Error(Errc::invalid_argument, "offset with zero denominator");
    offsets_[i].canonicalize();
    if (normals_[i].size() != dim_)
      throw Error(Errc::dimension_mismatch, "normal " + std::to_string(i) + " has wrong length");
    if (!is_primitive(normals_[i]))
      throw Error(Errc::invalid_argument, "normal " + to_string(normals_[i]) + " is not primitive");
    if (!seen.emplace(normals_[i], offsets_[i]).second)
      throw Error(Errc::invalid_argument, "duplicate facet " + to_string(normals_[i]));
  }
}

Rational HalfspacePolytope::slack(std::span<const Rational> x, std::size_t i) const {
  return dot(x, std::span<const Integer>(normals_.at(i))) - offsets_.at(i);
}

bool HalfspacePolytope::contains(std::span<const Rational> x) const {
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (slack(x, i) < 0) return false;
  return true;
}

bool HalfspacePolytope::contains(std::span<const Integer> x) const {
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (Rational(dot(x, normals_[i])) < offsets_[i]) return false;
  return true;
}

bool HalfspacePolytope::contains_in_interior(std::span<const Integer> x) const {
  for (std::size_t i = 0; i < normals_.size(); ++i)
    if (Rational(dot(x, normals_[i])) <= offsets_[i]) return false;
  return true;
}

RationalVector AffineLatticeMap::apply(std::span<const Rational> x) const {
  RationalVector out = to_rational(matrix) * RationalVector(x.begin(), x.end());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += translation.at(i);
  return out;
}

RationalVector AffineLatticeMap::apply(std::span<const Integer> x) const {
  return apply(to_rational(x));
}

HalfspacePolytope AffineLatticeMap::apply(const HalfspacePolytope& p) const {
  // y = A x + t  =>  <x, u> = <A^{-1}(y - t), u> = <y - t, A^{-T} u>.
  const IntMatrix inv_t = inverse_unimodular(matrix).transpose();
  std::vector<IntVector> normals;
  RationalVector offsets;
  for (std::size_t i = 0; i < p.facet_count(); ++i) {
    IntVector w = inv_t * p.normal(i);
    offsets.push_back(p.offset(i) + dot(std::span<const Rational>(translation), std::span<const Integer>(w)));
    normals.push_back(std::move(w));
  }
  return HalfspacePolytope(p.dim(), std::move(normals), std::move(offsets));
}

bool is_bounded(const HalfspacePolytope& p) {
  const std::size_t n = p.dim();
  if (p.facet_count() < n + 1) return false;
  if (rank(to_rational(IntMatrix::from_columns(p.normals()))) < n) return false;
  // The recession cone is pointed; it is nontrivial iff one of its candidate
  // extreme rays (n-1 tight constraints) satisfies every constraint.
  bool bounded = true;
  for_each_combination(p.facet_count(), n - 1, [&](std::span<const std::size_t> idx) {
    IntMatrix m(n - 1, n);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < n; ++c) m(r, c) = p.normal(idx[r])[c];
    const IntVector ray = orthogonal_complement(m);
    if (std::all_of(ray.begin(), ray.end(), [](const Integer& x) { return x == 0; })) return true;
    for (int sign : {1, -1}) {
      bool recedes = true;
      for (const auto& u : p.normals())
        if (sign * dot(ray, u) < 0) {
          recedes = false;
          break;
        }
      if (recedes) {
        bounded = false;
        return false;
      }
    }
    return true;
  });
  return bounded;
}

std::vector<Vertex> enumerate_vertices(const HalfspacePolytope& p) {
  if (!is_bounded(p)) throw Error(Errc::unbounded, "polytope is unbounded");
  const std::size_t n = p.dim();
  std::set<RationalVector> points;
  for_each_combination(p.facet_count(), n, [&](std::span<const std::size_t> idx) {
    RationalMatrix m(n, n);
    RationalVector rhs(n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = p.normal(idx[r])[c];
      rhs[r] = p.offset(idx[r]);
    }
    if (auto x = solve_rational(m, rhs); x && p.contains(*x)) points.insert(std::move(*x));
    return true;
  });
  if (points.empty()) throw Error(Errc::empty, "polytope is empty");
  std::vector<Vertex> out;
  for (const auto& x : points) {
    Vertex v{x, {}};
    for (std::size_t i = 0; i < p.facet_count(); ++i)
      if (p.slack(x, i) == 0) v.active.push_back(i);
    out.push_back(std::move(v));
  }
  return out;
}

DelzantReport delzant_report(const HalfspacePolytope& p) {
  const auto vertices = enumerate_vertices(p);
  DelzantReport report{true, {}};
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    const auto& v = vertices[k];
    VertexCertificate cert{k, v.active, 0, false};
    if (v.active.size() == p.dim()) {
      std::vector<IntVector> cols;
      for (auto i : v.active) cols.push_back(p.normal(i));
      cert.det = det(IntMatrix::from_columns(cols));
      cert.ok = abs(cert.det) == 1;
    }
    report.delzant = report.delzant && cert.ok;
    report.vertices.push_back(std::move(cert));
  }
  return report;
}

bool is_delzant(const HalfspacePolytope& p) { return delzant_report(p).delzant; }

std::vector<IntVector> lattice_points(const HalfspacePolytope& p) {
  const auto vertices = enumerate_vertices(p);
  const std::size_t n = p.dim();
  IntVector lo(n), hi(n);
  for (std::size_t c = 0; c < n; ++c) {
    Rational mn = vertices.front().point[c], mx = mn;
    for (const auto& v : vertices) {
      mn = std::min(mn, v.point[c]);
      mx = std::max(mx, v.point[c]);
    }
    mpz_cdiv_q(lo[c].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_fdiv_q(hi[c].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  // Odometer over the box, last coordinate fastest, so output is lexicographic.
  while (true) {
    if (p.contains(std::span<const Integer>(x))) out.push_back(x);
    std::size_t c = n;
    while (c > 0) {
      --c;
      if (x[c] < hi[c]) {
        ++x[c];
        break;
      }
      x[c] = lo[c];
      if (c == 0) return out;
    }
  }
}

std::pair<AffineLatticeMap, HalfspacePolytope> normalize_at_vertex(const HalfspacePolytope& p,
                                                                   const Vertex& v) {
  const std::size_t n = p.dim();
  if (v.active.size() != n)
    throw Error(Errc::not_delzant, "vertex has " + std::to_string(v.active.size()) + " active facets");
  std::vector<IntVector> cols;
  for (auto i : v.active) cols.push_back(p.normal(i));
  if (!is_z_basis(cols)) throw Error(Errc::not_delzant, "active normals at vertex are not a Z-basis");
  const IntMatrix u = IntMatrix::from_columns(cols);
  // x |-> U^T (x - v): the active normals become e_1..e_n and v goes to 0.
  AffineLatticeMap map{u.transpose(), {}};
  map.translation = to_rational(map.matrix) * v.point;
  for (auto& t : map.translation) t = -t;
  return {map, map.apply(p)};
}

HalfspacePolytope scale(const HalfspacePolytope& p, const Rational& c) {
  if (c <= 0) throw Error(Errc::invalid_argument, "scale factor must be positive");
  RationalVector offsets = p.offsets();
  for (auto& o : offsets) o *= c;
  return HalfspacePolytope(p.dim(), p.normals(), std::move(offsets));
}

Integer offset_denominator_lcm(const HalfspacePolytope& p) { return denominator_lcm(p.offsets()); }

}  // namespace delzant

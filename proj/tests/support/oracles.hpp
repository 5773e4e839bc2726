#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library's elimination, vertex enumeration or search code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "delzant/polytope.hpp"

namespace oracle {

using delzant::Integer;
using delzant::IntVector;
using delzant::Rational;
using delzant::RationalVector;

using Square = std::vector<std::vector<Rational>>;

// Laplace expansion along the first row.
inline Rational det(const Square& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Square minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Rational> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    const Rational term = m[0][c] * det(minor);
    total += (c % 2 == 0) ? term : Rational(-term);
  }
  return total;
}

inline Rational det(const std::vector<IntVector>& rows) {
  Square m;
  for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
  return det(m);
}

// Cramer's rule; nullopt when singular.
inline std::optional<RationalVector> cramer(const Square& a, const RationalVector& b) {
  const Rational d = det(a);
  if (d == 0) return std::nullopt;
  RationalVector x(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) {
    Square ac = a;
    for (std::size_t r = 0; r < a.size(); ++r) ac[r][c] = b[r];
    x[c] = det(ac) / d;
  }
  return x;
}

inline bool inside(const delzant::HalfspacePolytope& p, const RationalVector& x) {
  for (std::size_t i = 0; i < p.facet_count(); ++i) {
    Rational s = 0;
    for (std::size_t k = 0; k < p.dim(); ++k) s += x[k] * p.normal(i)[k];
    if (s < p.offset(i)) return false;
  }
  return true;
}

// Feasible intersection points of every n-subset of facet hyperplanes.
inline std::vector<RationalVector> vertices(const delzant::HalfspacePolytope& p) {
  const std::size_t n = p.dim(), m = p.facet_count();
  std::vector<RationalVector> out;
  std::vector<bool> pick(m, false);
  std::fill(pick.begin(), pick.begin() + static_cast<long>(n), true);
  do {
    Square a;
    RationalVector b;
    for (std::size_t i = 0; i < m; ++i)
      if (pick[i]) {
        a.emplace_back(p.normal(i).begin(), p.normal(i).end());
        b.push_back(p.offset(i));
      }
    if (auto x = cramer(a, b); x && inside(p, *x) && std::find(out.begin(), out.end(), *x) == out.end())
      out.push_back(*x);
  } while (std::prev_permutation(pick.begin(), pick.end()));
  std::sort(out.begin(), out.end());
  return out;
}

inline Integer floor_q(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

inline Integer ceil_q(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Every integer point of the vertex bounding box that satisfies all
// inequalities, in lexicographic order. Bounded polytopes only.
inline std::vector<IntVector> box_lattice_points(const delzant::HalfspacePolytope& p) {
  const auto vs = vertices(p);
  const std::size_t n = p.dim();
  IntVector lo(n), hi(n);
  for (std::size_t k = 0; k < n; ++k) {
    Rational a = vs.front()[k], b = vs.front()[k];
    for (const auto& v : vs) a = std::min(a, v[k]), b = std::max(b, v[k]);
    lo[k] = ceil_q(a);
    hi[k] = floor_q(b);
  }
  std::vector<IntVector> out;
  IntVector x = lo;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      if (inside(p, RationalVector(x.begin(), x.end()))) out.push_back(x);
      return;
    }
    for (Integer t = lo[k]; t <= hi[k]; ++t) {
      x[k] = t;
      rec(k + 1);
    }
  };
  if (!vs.empty()) rec(0);
  return out;
}

// max of -sum lambda_i a_i over a in N^d, sum a_i u_i = 0, 1 <= sum a <= bound.
inline std::optional<Rational> brute_lambda(const delzant::HalfspacePolytope& p, unsigned bound) {
  const std::size_t d = p.facet_count(), n = p.dim();
  std::optional<Rational> best;
  std::vector<unsigned> a(d, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned used) {
    if (i == d) {
      if (used == 0) return;
      for (std::size_t k = 0; k < n; ++k) {
        Integer s = 0;
        for (std::size_t t = 0; t < d; ++t) s += a[t] * p.normal(t)[k];
        if (s != 0) return;
      }
      Rational v = 0;
      for (std::size_t t = 0; t < d; ++t) v -= a[t] * p.offset(t);
      if (!best || v > *best) best = v;
      return;
    }
    for (unsigned c = 0; used + c <= bound; ++c) {
      a[i] = c;
      rec(i + 1, used + c);
    }
    a[i] = 0;
  };
  rec(0, 0);
  return best;
}

struct Polygon {
  std::vector<IntVector> normals;
  RationalVector offsets;
  bool expect_delzant;
};

// Random polygons built from a smooth seed (square, triangle or Hirzebruch)
// by cutting corners. A cut with normal u_a + u_b keeps the polygon smooth;
// a cut with u_a + 2 u_b creates a corner of determinant 2. A random
// unimodular change of coordinates and a translation follow.
class PolygonGenerator {
 public:
  explicit PolygonGenerator(std::uint64_t seed) : rng_(seed) {}

  Polygon next(bool delzant) {
    for (;;) {
      if (auto p = attempt(delzant)) return *p;
    }
  }

 private:
  std::optional<Polygon> attempt(bool delzant) {
    Polygon g = seed_polygon();
    const int cuts = uniform(delzant ? 0 : 1, 3);
    // The singular cut goes last so no later cut can remove its corners.
    for (int c = 0; c < cuts; ++c)
      if (!cut_corner(g, delzant || c + 1 < cuts)) return std::nullopt;
    transform(g);
    g.expect_delzant = delzant;
    return g;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Polygon seed_polygon() {
    const int k = uniform(0, 3);
    const int a = uniform(2, 6);
    switch (k) {
      case 0:
        return {{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {0, 0, -a, -uniform(2, 6)}, true};
      case 1:
        return {{{1, 0}, {0, 1}, {-1, -1}}, {0, 0, -a}, true};
      default: {
        const int h = uniform(0, 2);
        const int b = uniform(2, 4);
        // x >= 0, 0 <= y <= b, x + h y <= a + h b
        return {{{1, 0}, {0, 1}, {0, -1}, {-1, -h}}, {0, 0, -b, Rational(-a - h * b)}, true};
      }
    }
  }

  // Cuts a random corner by a small integral amount; gives up unless exactly
  // one vertex is replaced by two simple ones.
  bool cut_corner(Polygon& g, bool smooth) {
    const delzant::HalfspacePolytope p(2, g.normals, g.offsets);
    const auto vs = delzant::enumerate_vertices(p);
    const auto& v = vs[static_cast<std::size_t>(uniform(0, static_cast<int>(vs.size()) - 1))];
    if (v.active.size() != 2) return false;
    std::size_t a = v.active[0], b = v.active[1];
    if (!smooth && uniform(0, 1) == 1) std::swap(a, b);
    const Integer wa = 1, wb = smooth ? 1 : 2;
    IntVector u = {wa * g.normals[a][0] + wb * g.normals[b][0], wa * g.normals[a][1] + wb * g.normals[b][1]};
    const Rational at_vertex = v.point[0] * u[0] + v.point[1] * u[1];
    const Rational cut = at_vertex + uniform(1, 2);
    auto normals = g.normals;
    auto offsets = g.offsets;
    normals.push_back(u);
    offsets.push_back(cut);
    try {
      const delzant::HalfspacePolytope q(2, normals, offsets);
      const auto qs = delzant::enumerate_vertices(q);
      if (qs.size() != vs.size() + 1) return false;
      for (const auto& w : qs)
        if (w.active.size() != 2) return false;
    } catch (const delzant::Error&) {
      return false;
    }
    g.normals = std::move(normals);
    g.offsets = std::move(offsets);
    return true;
  }

  void transform(Polygon& g) {
    // Product of elementary matrices, determinant +-1.
    Integer m[2][2] = {{1, 0}, {0, 1}};
    for (int s = 0; s < 3; ++s) {
      const int t = uniform(-2, 2);
      if (uniform(0, 1) == 0)
        for (auto& row : m) row[0] += t * row[1];
      else
        for (auto& row : m) row[1] += t * row[0];
    }
    if (uniform(0, 1) == 1) std::swap(m[0], m[1]);
    const IntVector shift = {uniform(-5, 5), uniform(-5, 5)};
    for (std::size_t i = 0; i < g.normals.size(); ++i) {
      const IntVector u = g.normals[i];
      g.normals[i] = {m[0][0] * u[0] + m[0][1] * u[1], m[1][0] * u[0] + m[1][1] * u[1]};
      g.offsets[i] += g.normals[i][0] * shift[0] + g.normals[i][1] * shift[1];
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace oracle

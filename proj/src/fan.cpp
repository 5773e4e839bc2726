#include "delzant/fan.hpp"

#include <algorithm>
#include <set>

namespace delzant {

const char* to_string(Completeness c) noexcept {
  switch (c) {
    case Completeness::complete: return "complete";
    case Completeness::incomplete: return "incomplete";
    case Completeness::unverified: return "unverified";
  }
  return "unknown";
}

namespace {

Integer cross(const IntVector& a, const IntVector& b) { return a[0] * b[1] - a[1] * b[0]; }

// p = alpha a + beta b with alpha, beta > 0 (a, b independent, plane only).
bool strictly_inside(const IntVector& p, const IntVector& a, const IntVector& b) {
  const Integer d = cross(a, b);
  const Integer alpha = cross(p, b);  // alpha * d
  const Integer beta = cross(a, p);   // beta * d
  return sgn(alpha) == sgn(d) && sgn(beta) == sgn(d) && alpha != 0 && beta != 0;
}

// Two cones in the plane meet along a common face iff neither has a generator
// strictly inside the other and their interiors are not the same sector.
bool plane_cones_meet_properly(const Fan& f, const std::vector<std::size_t>& a,
                               const std::vector<std::size_t>& b) {
  auto gen = [&](std::size_t i) -> const IntVector& { return f.generator(i); };
  auto has_inside = [&](const std::vector<std::size_t>& outer, const std::vector<std::size_t>& inner) {
    if (outer.size() != 2) return false;
    for (auto i : inner)
      if (strictly_inside(gen(i), gen(outer[0]), gen(outer[1]))) return true;
    if (inner.size() == 2) {
      IntVector mid{gen(inner[0])[0] + gen(inner[1])[0], gen(inner[0])[1] + gen(inner[1])[1]};
      if (strictly_inside(mid, gen(outer[0]), gen(outer[1]))) return true;
    }
    return false;
  };
  return !has_inside(a, b) && !has_inside(b, a);
}

int half_plane(const IntVector& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

}  // namespace

Fan::Fan(std::size_t dim, std::vector<IntVector> generators, std::vector<std::vector<std::size_t>> max_cones,
         bool complete_by_construction)
    : dim_(dim),
      generators_(std::move(generators)),
      max_cones_(std::move(max_cones)),
      complete_by_construction_(complete_by_construction) {
  if (dim_ == 0) throw Error(Errc::invalid_argument, "fan dimension must be positive");
  std::set<IntVector> seen;
  for (const auto& u : generators_) {
    if (u.size() != dim_) throw Error(Errc::dimension_mismatch, "generator has wrong length");
    if (!is_primitive(u)) throw Error(Errc::invalid_argument, "generator " + to_string(u) + " is not primitive");
    if (!seen.insert(u).second) throw Error(Errc::invalid_argument, "duplicate generator " + to_string(u));
  }
  std::set<std::vector<std::size_t>> cones;
  for (auto& c : max_cones_) {
    std::sort(c.begin(), c.end());
    if (c.empty() || c.size() > dim_) throw Error(Errc::invalid_argument, "maximal cone has bad size");
    if (std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error(Errc::invalid_argument, "repeated generator in a cone");
    std::vector<IntVector> cols;
    for (auto i : c) {
      if (i >= generators_.size()) throw Error(Errc::invalid_argument, "cone index out of range");
      cols.push_back(generators_[i]);
    }
    if (rank(to_rational(IntMatrix::from_columns(cols))) != c.size())
      throw Error(Errc::invalid_argument, "cone generators are linearly dependent");
    if (!cones.insert(c).second) throw Error(Errc::invalid_argument, "duplicate maximal cone");
  }
  if (dim_ == 2) {
    for (std::size_t i = 0; i < max_cones_.size(); ++i)
      for (std::size_t j = i + 1; j < max_cones_.size(); ++j)
        if (!plane_cones_meet_properly(*this, max_cones_[i], max_cones_[j]))
          throw Error(Errc::invalid_argument, "cones " + std::to_string(i) + " and " + std::to_string(j) +
                                                  " do not meet along a common face");
  }
}

Cone Fan::cone(std::size_t k) const {
  Cone c;
  for (auto i : max_cones_.at(k)) c.generators.push_back(generators_[i]);
  return c;
}

bool is_smooth(const Fan& f) {
  bool smooth = true;
  for (std::size_t k = 0; k < f.max_cones().size(); ++k) {
    if (f.max_cones()[k].size() != f.dim())
      throw Error(Errc::invalid_argument, "maximal cone " + std::to_string(k) + " is not full-dimensional");
    smooth = smooth && is_z_basis(f.cone(k).generators);
  }
  return smooth;
}

Completeness is_complete(const Fan& f) {
  if (f.dim() == 1) {
    bool pos = false, neg = false;
    for (const auto& c : f.max_cones()) {
      pos = pos || f.generator(c[0])[0] > 0;
      neg = neg || f.generator(c[0])[0] < 0;
    }
    return pos && neg ? Completeness::complete : Completeness::incomplete;
  }
  if (f.dim() > 2) return f.complete_by_construction() ? Completeness::complete : Completeness::unverified;

  std::set<std::vector<std::size_t>> sectors;
  std::set<std::size_t> rays;
  for (const auto& c : f.max_cones())
    if (c.size() == 2) {
      sectors.insert(c);
      rays.insert(c.begin(), c.end());
    }
  if (rays.size() < 3 || sectors.size() != rays.size()) return Completeness::incomplete;
  std::vector<std::size_t> order(rays.begin(), rays.end());
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto& u = f.generator(a);
    const auto& v = f.generator(b);
    if (half_plane(u) != half_plane(v)) return half_plane(u) < half_plane(v);
    return cross(u, v) > 0;
  });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const std::size_t a = order[k], b = order[(k + 1) % order.size()];
    if (cross(f.generator(a), f.generator(b)) <= 0) return Completeness::incomplete;
    if (!sectors.count({std::min(a, b), std::max(a, b)})) return Completeness::incomplete;
  }
  return Completeness::complete;
}

Fan normal_fan_of_simple(const HalfspacePolytope& p) {
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& v : enumerate_vertices(p)) {
    if (v.active.size() != p.dim()) throw Error(Errc::not_delzant, "polytope is not simple");
    cones.push_back(v.active);
  }
  return Fan(p.dim(), p.normals(), std::move(cones), true);
}

Fan normal_fan(const HalfspacePolytope& p) {
  if (!is_delzant(p)) throw Error(Errc::not_delzant, "normal_fan: polytope is not Delzant");
  return normal_fan_of_simple(p);
}

SupportFunction support_function(const HalfspacePolytope& p) {
  if (!p.has_integral_offsets()) throw Error(Errc::not_integral, "support_function: offsets must be integral");
  return SupportFunction{to_integer(p.offsets())};
}

HalfspacePolytope polytope_from_support(const Fan& f, const SupportFunction& g) {
  if (g.values.size() != f.generators().size())
    throw Error(Errc::dimension_mismatch, "support function length differs from generator count");
  return HalfspacePolytope(f.dim(), f.generators(), to_rational(g.values));
}

RationalVector linear_piece(const Fan& f, const SupportFunction& g, std::size_t cone) {
  const auto& idx = f.max_cones().at(cone);
  if (idx.size() != f.dim()) throw Error(Errc::invalid_argument, "linear_piece: cone is not full-dimensional");
  const std::size_t n = f.dim();
  RationalMatrix m(n, n);
  RationalVector rhs(n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = f.generator(idx[r])[c];
    rhs[r] = g.values.at(idx[r]);
  }
  auto x = solve_rational(m, rhs);
  if (!x) throw Error(Errc::invalid_argument, "linear_piece: singular cone");
  return *x;
}

bool is_strictly_convex(const Fan& f, const SupportFunction& g) {
  if (g.values.size() != f.generators().size())
    throw Error(Errc::dimension_mismatch, "support function length differs from generator count");
  if (!is_smooth(f)) throw Error(Errc::not_smooth, "is_strictly_convex: fan is not smooth");
  if (is_complete(f) == Completeness::incomplete)
    throw Error(Errc::invalid_argument, "is_strictly_convex: fan is not complete");
  std::set<RationalVector> pieces;
  for (std::size_t k = 0; k < f.max_cones().size(); ++k) {
    const RationalVector m = linear_piece(f, g, k);
    for (std::size_t i = 0; i < f.generators().size(); ++i)
      if (dot(std::span<const Rational>(m), std::span<const Integer>(f.generator(i))) < Rational(g.values[i]))
        return false;
    if (!pieces.insert(m).second) return false;
  }
  return true;
}

}  // namespace delzant

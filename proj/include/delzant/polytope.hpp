#pragma once

// Convex polytopes in H-representation { x : <x, u_i> >= lambda_i }.

#include <cstddef>
#include <utility>
#include <vector>

#include "delzant/lattice.hpp"

namespace delzant {

class HalfspacePolytope {
 public:
  /// Validates shapes, primitivity of every normal and uniqueness of the
  /// (normal, offset) pairs.
  HalfspacePolytope(std::size_t dim, std::vector<IntVector> normals, RationalVector offsets);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t facet_count() const noexcept { return normals_.size(); }
  const std::vector<IntVector>& normals() const noexcept { return normals_; }
  const RationalVector& offsets() const noexcept { return offsets_; }
  const IntVector& normal(std::size_t i) const { return normals_.at(i); }
  const Rational& offset(std::size_t i) const { return offsets_.at(i); }

  /// <x, u_i> - lambda_i.
  Rational slack(std::span<const Rational> x, std::size_t i) const;
  bool contains(std::span<const Rational> x) const;
  bool contains(std::span<const Integer> x) const;
  /// Strictly inside every halfspace.
  bool contains_in_interior(std::span<const Integer> x) const;

  bool has_integral_offsets() const { return is_integral(offsets_); }

  friend bool operator==(const HalfspacePolytope&, const HalfspacePolytope&) = default;

 private:
  std::size_t dim_;
  std::vector<IntVector> normals_;
  RationalVector offsets_;
};

struct Vertex {
  RationalVector point;
  /// Facets with <point, u_i> = lambda_i, ascending.
  std::vector<std::size_t> active;
};

/// x |-> matrix * x + translation with a unimodular integer matrix.
struct AffineLatticeMap {
  IntMatrix matrix;
  RationalVector translation;

  RationalVector apply(std::span<const Rational> x) const;
  RationalVector apply(std::span<const Integer> x) const;
  /// Image of a polytope under the map.
  HalfspacePolytope apply(const HalfspacePolytope& p) const;
};

/// True iff the recession cone { r : <r, u_i> >= 0 for all i } is {0}.
bool is_bounded(const HalfspacePolytope& p);

/// All vertices, sorted lexicographically by coordinates. Throws
/// Errc::unbounded or Errc::empty.
std::vector<Vertex> enumerate_vertices(const HalfspacePolytope& p);

struct VertexCertificate {
  std::size_t vertex;
  std::vector<std::size_t> active;
  Integer det;  // determinant of the active normals; 0 when |active| != n
  bool ok;
};

struct DelzantReport {
  bool delzant;
  std::vector<VertexCertificate> vertices;
};

DelzantReport delzant_report(const HalfspacePolytope& p);
bool is_delzant(const HalfspacePolytope& p);

/// P intersected with Z^n, sorted lexicographically.
std::vector<IntVector> lattice_points(const HalfspacePolytope& p);

/// Lattice-preserving affine map sending vertex v to the origin and the facets
/// active at v (ascending index) to the coordinate hyperplanes x_k >= 0.
std::pair<AffineLatticeMap, HalfspacePolytope> normalize_at_vertex(const HalfspacePolytope& p,
                                                                   const Vertex& v);

/// Offsets multiplied by c > 0.
HalfspacePolytope scale(const HalfspacePolytope& p, const Rational& c);

/// Least common multiple of the offset denominators.
Integer offset_denominator_lcm(const HalfspacePolytope& p);

}  // namespace delzant

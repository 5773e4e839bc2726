#pragma once

// Simplicial fans, support functions and the polytope <-> fan dictionary.

#include <cstddef>
#include <vector>

#include "delzant/lattice.hpp"
#include "delzant/polytope.hpp"

namespace delzant {

struct Cone {
  std::vector<IntVector> generators;
};

enum class Completeness { complete, incomplete, unverified };

const char* to_string(Completeness c) noexcept;

class Fan {
 public:
  /// Validates primitivity and distinctness of the generators, linear
  /// independence inside every cone and distinctness of the maximal cones.
  /// In dimension 2 it also checks that cones meet along common faces.
  /// Index sets are stored sorted ascending.
  Fan(std::size_t dim, std::vector<IntVector> generators, std::vector<std::vector<std::size_t>> max_cones,
      bool complete_by_construction = false);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<IntVector>& generators() const noexcept { return generators_; }
  const IntVector& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<std::vector<std::size_t>>& max_cones() const noexcept { return max_cones_; }
  Cone cone(std::size_t k) const;
  bool complete_by_construction() const noexcept { return complete_by_construction_; }

 private:
  std::size_t dim_;
  std::vector<IntVector> generators_;
  std::vector<std::vector<std::size_t>> max_cones_;
  bool complete_by_construction_;
};

/// Values g(u_i), one per fan generator.
struct SupportFunction {
  IntVector values;
};

/// Every maximal cone has n generators forming a Z-basis. Throws
/// invalid_argument when some maximal cone has != n generators.
bool is_smooth(const Fan& f);

/// Exact in dimensions 1 and 2. In higher dimensions only normal fans of
/// bounded polytopes are recognised (as complete); otherwise unverified.
Completeness is_complete(const Fan& f);

/// Facet normals as generators, active sets of the vertices as maximal cones.
/// Requires a Delzant polytope.
Fan normal_fan(const HalfspacePolytope& p);
/// Same construction for any bounded simple polytope (no Z-basis
/// requirement); throws not_delzant if some vertex has more than n facets.
Fan normal_fan_of_simple(const HalfspacePolytope& p);

/// g(u_i) = lambda_i; offsets must be integral.
SupportFunction support_function(const HalfspacePolytope& p);

/// The polytope { x : <x, u_i> >= g(u_i) }.
HalfspacePolytope polytope_from_support(const Fan& f, const SupportFunction& g);

/// The linear function g_sigma on a maximal cone, as the vector m with
/// <m, u_i> = g(u_i) for i in the cone.
RationalVector linear_piece(const Fan& f, const SupportFunction& g, std::size_t cone);

/// (a) g_sigma(u_i) >= g(u_i) for every maximal cone sigma and generator u_i,
/// i.e. g is the minimum of its linear pieces; (b) the pieces are pairwise
/// distinct. Requires a smooth fan that is not known to be incomplete.
bool is_strictly_convex(const Fan& f, const SupportFunction& g);

}  // namespace delzant

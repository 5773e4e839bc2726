#pragma once

// Monomial bases of sections and the Kodaira map restricted to a chart.
//
// Two independent routes produce the exponent set: the linear conditions on
// the exponents of z_1^{x_1}...z_d^{x_d} coming from the K_Sigma-equivariance
// of sections, and the lattice points of the polytope moved to the chart's
// vertex. They must agree as sets.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "delzant/charts.hpp"
#include "delzant/fan.hpp"
#include "delzant/polytope.hpp"

namespace delzant {

struct MonomialEmbedding {
  std::vector<IntVector> exponents;  // sorted lexicographically, non-negative, distinct
  std::optional<std::size_t> cone;   // chart it was computed on, if known

  std::size_t dim() const { return exponents.empty() ? 0 : exponents.front().size(); }
  std::size_t size() const noexcept { return exponents.size(); }
};

/// Validates and sorts an exponent list.
MonomialEmbedding make_embedding(std::vector<IntVector> exponents, std::optional<std::size_t> cone = {});

/// c_l = g(u_l) - sum_k v_{lk} g(u_{j_k}) for every complement index l.
IntVector twist_exponents(const ChartData& c, const SupportFunction& g);

/// Full exponent vector (x_1..x_d) of the section attached to x in Z^n on the
/// chart: x on the cone slots, complement slots determined by the linear
/// conditions. The entries may be negative when x is not a section.
IntVector section_exponents(const ChartData& c, const SupportFunction& g, std::span<const Integer> x);

/// Exponents x >= 0 whose complement exponents are also >= 0, searched over
/// the bounding box of the polytope normalised at the cone's vertex. Throws
/// not_strictly_convex when g is not strictly convex.
MonomialEmbedding sections_by_conditions(const Fan& f, const SupportFunction& g, std::size_t cone);

/// Lattice points of normalize_at_vertex(p, v).
MonomialEmbedding sections_by_polytope(const HalfspacePolytope& p, const Vertex& v);

/// [ ..., xi^{J_k}, ... ]. Throws numeric_domain if every coordinate vanishes.
ComplexVector kodaira_eval(const MonomialEmbedding& e, std::span<const Complex> xi);

}  // namespace delzant

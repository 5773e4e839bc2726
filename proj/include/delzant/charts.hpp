#pragma once

// Affine charts C^n of a smooth complete toric manifold, one per maximal cone,
// in the quotient picture X = C^d_Sigma / K_Sigma.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "delzant/fan.hpp"
#include "delzant/lattice.hpp"

namespace delzant {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

struct ChartData {
  std::size_t cone = 0;                     // index into Fan::max_cones()
  std::vector<std::size_t> cone_indices;    // j_1 < ... < j_n
  std::vector<std::size_t> complement;      // j_{n+1} < ... < j_d
  IntMatrix u;                              // columns u_{j_1} .. u_{j_n}
  IntMatrix u_inv;
  IntMatrix v;                              // n x (d-n); column l is U^{-1} u_{complement[l]}

  std::size_t dim() const noexcept { return cone_indices.size(); }
  std::size_t generator_count() const noexcept { return cone_indices.size() + complement.size(); }
};

/// Monomial map xi |-> (prod_m xi_m^{E(k,m)})_k.
struct MonomialMap {
  IntMatrix exponents;

  /// True when all exponents are non-negative, i.e. the map extends to C^n.
  bool polynomial() const;
  ComplexVector evaluate(std::span<const Complex> xi) const;
};

/// g o f.
MonomialMap compose(const MonomialMap& g, const MonomialMap& f);

/// Integer power by repeated squaring; negative exponents invert.
Complex int_pow(Complex base, const Integer& exponent);

ChartData chart_for_cone(const Fan& f, std::size_t cone);

/// The chart map on a homogeneous representative z in C^d. Throws
/// numeric_domain if some complement coordinate vanishes.
ComplexVector phi_sigma(const ChartData& c, std::span<const Complex> z);

/// Representative with xi on the cone slots and 1 elsewhere.
ComplexVector psi_sigma(const ChartData& c, std::span<const Complex> xi);

/// Element of K_Sigma with the given complement coordinates.
ComplexVector kernel_param(const ChartData& c, std::span<const Complex> alpha_complement);

/// pi(alpha)_i = prod_t alpha_t^{(u_t)_i}; K_Sigma is its kernel.
ComplexVector torus_projection(const Fan& f, std::span<const Complex> alpha);

/// phi_{c2} o psi_{c1} as a monomial map; exponent matrix U_2^{-1} U_1.
MonomialMap transition_map(const ChartData& c1, const ChartData& c2);

/// n x d exponent matrix of the components of phi_sigma in z_1..z_d.
IntMatrix phi_exponents(const ChartData& c);

/// Basis (one vector per complement index) of the relations
/// { a in Z^d : sum a_i u_i = 0 } read off from the kernel parametrisation.
std::vector<IntVector> kernel_exponent_basis(const ChartData& c);

/// Symbolic K_Sigma-invariance of phi_sigma: each basis vector is a relation
/// of the generators and every row of phi_exponents is orthogonal to it.
bool phi_kernel_invariant(const Fan& f, const ChartData& c);

}  // namespace delzant

#pragma once

// Floating-point side of the width bound: the rotation-invariant potential
// Phi(xi) = 2 log sum_k |xi|^{2 J_k}, the map Psi(xi)_k = sqrt(dPhi/dx_k) xi_k
// into (C^n, omega_0), and finite-difference checks that Psi is symplectic
// and that its image sits inside the cylinders |z_j|^2 < 2 max_k (J_k)_j.
//
// Sums of monomials are evaluated in log space so that points far out along
// the escape paths (t^s ~ 1e60) do not overflow.

#include <cstddef>
#include <span>
#include <vector>

#include "delzant/charts.hpp"
#include "delzant/embedding.hpp"

namespace delzant {

class ToricPotential {
 public:
  explicit ToricPotential(std::vector<std::vector<int>> exponents);
  static ToricPotential from_embedding(const MonomialEmbedding& e);

  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::vector<int>>& exponents() const noexcept { return exponents_; }
  int max_exponent(std::size_t axis) const;

  /// 2 log sum_k x^{J_k} for x >= 0 (some monomial must be nonzero).
  double value(std::span<const double> x) const;
  /// Phi(xi) = value(|xi_1|^2, ..., |xi_n|^2).
  double value(std::span<const Complex> xi) const;

 private:
  std::size_t dim_;
  std::vector<std::vector<int>> exponents_;
};

/// dPhi~/dx_j at a point with all coordinates > 0.
double potential_partial(const ToricPotential& t, std::span<const double> x, std::size_t j);

/// Continuous extension of the partial to x >= 0, written as
/// 2 sum_k (J_k)_j x^{J_k - e_j} / sum_k x^{J_k}.
double potential_partial_extended(const ToricPotential& t, std::span<const double> x, std::size_t j);

/// Psi(xi). Throws numeric_domain where some partial is not positive.
ComplexVector psi_map(const ToricPotential& t, std::span<const Complex> xi);

/// Max |J^T Omega_0 J - Omega| over entries, where J is the real Jacobian of
/// Psi and Omega the real matrix of (i/2) d d-bar Phi, both by central
/// differences. Throws numeric_domain when the Jacobian is numerically
/// singular (smallest singular value below 1e-8 times the largest).
double pullback_check(const ToricPotential& t, std::span<const Complex> xi);

/// sqrt(x_j dPhi~/dx_j) = sqrt(2 sum (J_k)_j x^{J_k} / sum x^{J_k}), x > 0.
double radial_quantity(const ToricPotential& t, std::span<const double> x, std::size_t j);

/// radial_quantity along x_i = t (i != j), x_j = t^s at t = t_max.
double sup_along_path(const ToricPotential& t, std::size_t j, unsigned s, double t_max);

/// Smallest s with s > max_k sum_{i != j} (J_k)_i.
unsigned sufficient_path_exponent(const ToricPotential& t, std::size_t j);

/// log(1 + sum |u_j|^2).
double fs_diastasis(std::span<const Complex> u);

}  // namespace delzant

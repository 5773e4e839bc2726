#include "delzant/charts.hpp"

#include <algorithm>

namespace delzant {

Complex int_pow(Complex base, const Integer& exponent) {
  if (!exponent.fits_slong_p()) throw Error(Errc::numeric_domain, "exponent out of range");
  long e = exponent.get_si();
  const bool invert = e < 0;
  unsigned long k = invert ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
  Complex acc = 1.0;
  while (k) {
    if (k & 1UL) acc *= base;
    base *= base;
    k >>= 1;
  }
  return invert ? 1.0 / acc : acc;
}

bool MonomialMap::polynomial() const {
  for (std::size_t i = 0; i < exponents.rows(); ++i)
    for (std::size_t j = 0; j < exponents.cols(); ++j)
      if (exponents(i, j) < 0) return false;
  return true;
}

ComplexVector MonomialMap::evaluate(std::span<const Complex> xi) const {
  if (xi.size() != exponents.cols()) throw Error(Errc::dimension_mismatch, "monomial map: wrong input length");
  ComplexVector out(exponents.rows(), 1.0);
  for (std::size_t k = 0; k < exponents.rows(); ++k)
    for (std::size_t m = 0; m < exponents.cols(); ++m) {
      if (exponents(k, m) < 0 && xi[m] == 0.0)
        throw Error(Errc::numeric_domain, "monomial map: negative power of zero");
      out[k] *= int_pow(xi[m], exponents(k, m));
    }
  return out;
}

MonomialMap compose(const MonomialMap& g, const MonomialMap& f) { return {g.exponents * f.exponents}; }

ChartData chart_for_cone(const Fan& f, std::size_t cone) {
  const auto& idx = f.max_cones().at(cone);
  const std::size_t n = f.dim();
  const std::size_t d = f.generators().size();
  if (idx.size() != n) throw Error(Errc::invalid_argument, "chart_for_cone: cone is not full-dimensional");
  ChartData c;
  c.cone = cone;
  c.cone_indices = idx;
  for (std::size_t i = 0; i < d; ++i)
    if (!std::binary_search(idx.begin(), idx.end(), i)) c.complement.push_back(i);
  std::vector<IntVector> cols;
  for (auto i : idx) cols.push_back(f.generator(i));
  c.u = IntMatrix::from_columns(cols);
  c.u_inv = inverse_unimodular(c.u);  // throws not_unimodular for a singular chart
  c.v = IntMatrix(n, c.complement.size());
  for (std::size_t l = 0; l < c.complement.size(); ++l) {
    const IntVector col = c.u_inv * f.generator(c.complement[l]);
    for (std::size_t k = 0; k < n; ++k) c.v(k, l) = col[k];
  }
  return c;
}

ComplexVector phi_sigma(const ChartData& c, std::span<const Complex> z) {
  if (z.size() != c.generator_count()) throw Error(Errc::dimension_mismatch, "phi_sigma: wrong input length");
  for (auto l : c.complement)
    if (z[l] == 0.0) throw Error(Errc::numeric_domain, "phi_sigma: point is outside the chart");
  ComplexVector out(c.dim());
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Complex w = z[c.cone_indices[k]];
    for (std::size_t l = 0; l < c.complement.size(); ++l) w *= int_pow(z[c.complement[l]], c.v(k, l));
    out[k] = w;
  }
  return out;
}

ComplexVector psi_sigma(const ChartData& c, std::span<const Complex> xi) {
  if (xi.size() != c.dim()) throw Error(Errc::dimension_mismatch, "psi_sigma: wrong input length");
  ComplexVector z(c.generator_count(), 1.0);
  for (std::size_t k = 0; k < c.dim(); ++k) z[c.cone_indices[k]] = xi[k];
  return z;
}

ComplexVector kernel_param(const ChartData& c, std::span<const Complex> alpha_complement) {
  if (alpha_complement.size() != c.complement.size())
    throw Error(Errc::dimension_mismatch, "kernel_param: wrong input length");
  for (const auto& a : alpha_complement)
    if (a == 0.0) throw Error(Errc::numeric_domain, "kernel_param: inputs must be nonzero");
  ComplexVector alpha(c.generator_count(), 1.0);
  for (std::size_t l = 0; l < c.complement.size(); ++l) alpha[c.complement[l]] = alpha_complement[l];
  for (std::size_t k = 0; k < c.dim(); ++k) {
    Complex w = 1.0;
    for (std::size_t l = 0; l < c.complement.size(); ++l) w *= int_pow(alpha_complement[l], -c.v(k, l));
    alpha[c.cone_indices[k]] = w;
  }
  return alpha;
}

ComplexVector torus_projection(const Fan& f, std::span<const Complex> alpha) {
  if (alpha.size() != f.generators().size())
    throw Error(Errc::dimension_mismatch, "torus_projection: wrong input length");
  ComplexVector out(f.dim(), 1.0);
  for (std::size_t i = 0; i < f.dim(); ++i)
    for (std::size_t t = 0; t < alpha.size(); ++t) out[i] *= int_pow(alpha[t], f.generator(t)[i]);
  return out;
}

MonomialMap transition_map(const ChartData& c1, const ChartData& c2) {
  if (c1.dim() != c2.dim() || c1.generator_count() != c2.generator_count())
    throw Error(Errc::dimension_mismatch, "transition_map: charts from different fans");
  if (c1.cone_indices == c2.cone_indices) return {IntMatrix::identity(c1.dim())};
  return {c2.u_inv * c1.u};
}

IntMatrix phi_exponents(const ChartData& c) {
  IntMatrix e(c.dim(), c.generator_count());
  for (std::size_t k = 0; k < c.dim(); ++k) {
    e(k, c.cone_indices[k]) = 1;
    for (std::size_t l = 0; l < c.complement.size(); ++l) e(k, c.complement[l]) = c.v(k, l);
  }
  return e;
}

std::vector<IntVector> kernel_exponent_basis(const ChartData& c) {
  std::vector<IntVector> basis;
  for (std::size_t l = 0; l < c.complement.size(); ++l) {
    IntVector r(c.generator_count());
    r[c.complement[l]] = 1;
    for (std::size_t k = 0; k < c.dim(); ++k) r[c.cone_indices[k]] = -c.v(k, l);
    basis.push_back(std::move(r));
  }
  return basis;
}

bool phi_kernel_invariant(const Fan& f, const ChartData& c) {
  const IntMatrix e = phi_exponents(c);
  for (const auto& r : kernel_exponent_basis(c)) {
    IntVector sum(f.dim());
    for (std::size_t t = 0; t < r.size(); ++t)
      for (std::size_t i = 0; i < f.dim(); ++i) sum[i] += r[t] * f.generator(t)[i];
    if (std::any_of(sum.begin(), sum.end(), [](const Integer& x) { return x != 0; })) return false;
    for (std::size_t k = 0; k < e.rows(); ++k)
      if (dot(e.row(k), r) != 0) return false;
  }
  return true;
}

}  // namespace delzant

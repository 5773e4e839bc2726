#include "delzant/verify.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "delzant/charts.hpp"
#include "delzant/embedding.hpp"
#include "delzant/fan.hpp"
#include "delzant/numeric.hpp"

namespace delzant {

bool VerifyReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  Complex polar(double lo, double hi) {
    std::uniform_real_distribution<double> mod(lo, hi), ang(0.0, 2.0 * std::numbers::pi);
    return std::polar(mod(rng_), ang(rng_));
  }
  ComplexVector polar_vector(std::size_t n, double lo, double hi) {
    ComplexVector v(n);
    for (auto& z : v) z = polar(lo, hi);
    return v;
  }
  std::vector<double> positive(std::size_t n, double lo, double hi) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<double> v(n);
    for (auto& x : v) x = u(rng_);
    return v;
  }

 private:
  std::mt19937_64 rng_;
};

double rel_dev(std::span<const Complex> a, std::span<const Complex> b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
  return worst;
}

ComplexVector times(std::span<const Complex> a, std::span<const Complex> b) {
  ComplexVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * b[i];
  return out;
}

CheckResult exact(std::string name, bool ok, std::string detail = {}) {
  return {std::move(name), ok, ok ? 0.0 : 1.0, 0.0, std::move(detail)};
}

CheckResult tolerance(std::string name, double observed, double tol) {
  return {std::move(name), observed < tol, observed, tol, {}};
}

void chart_checks(const Fan& fan, const SupportFunction& g, Sampler& rng, std::size_t samples,
                  VerifyReport& rep) {
  std::vector<ChartData> charts;
  for (std::size_t k = 0; k < fan.max_cones().size(); ++k) charts.push_back(chart_for_cone(fan, k));
  const std::size_t d = fan.generators().size();
  const std::size_t n = fan.dim();

  bool symbolic = true;
  double kernel_dev = 0.0, equivariance_dev = 0.0, roundtrip_dev = 0.0, section_dev = 0.0;
  for (const auto& c : charts) {
    symbolic = symbolic && phi_kernel_invariant(fan, c);
    for (std::size_t s = 0; s < samples; ++s) {
      const ComplexVector z = rng.polar_vector(d, 0.5, 2.0);
      const ComplexVector alpha = kernel_param(c, rng.polar_vector(c.complement.size(), 0.5, 2.0));
      const ComplexVector base = phi_sigma(c, z);
      kernel_dev = std::max(kernel_dev, rel_dev(phi_sigma(c, times(alpha, z)), base));

      const ComplexVector torus = rng.polar_vector(d, 0.5, 2.0);
      // pi(alpha) read in the chart's coordinates is the monomial map U^{-1}.
      const ComplexVector shift = MonomialMap{c.u_inv}.evaluate(torus_projection(fan, torus));
      equivariance_dev = std::max(equivariance_dev, rel_dev(phi_sigma(c, times(torus, z)), times(shift, base)));

      const ComplexVector xi = rng.polar_vector(n, 0.5, 2.0);
      roundtrip_dev = std::max(roundtrip_dev, rel_dev(phi_sigma(c, psi_sigma(c, xi)), xi));

      // A section monomial picks up prod alpha_i^{-g(u_i)} under K_Sigma.
      const IntVector x(n, 1);
      const IntVector full = section_exponents(c, g, x);
      Complex f_z = 1.0, f_az = 1.0, factor = 1.0;
      for (std::size_t i = 0; i < d; ++i) {
        f_z *= int_pow(z[i], full[i]);
        f_az *= int_pow(alpha[i] * z[i], full[i]);
        factor *= int_pow(alpha[i], -g.values[i]);
      }
      section_dev = std::max(section_dev, std::abs(f_az - factor * f_z) / std::max(1.0, std::abs(factor * f_z)));
    }
  }
  rep.checks.push_back(exact("charts.kernel_invariance_symbolic", symbolic));
  rep.checks.push_back(tolerance("charts.kernel_invariance_numeric", kernel_dev, 1e-9));
  rep.checks.push_back(tolerance("charts.torus_equivariance", equivariance_dev, 1e-9));
  rep.checks.push_back(tolerance("charts.phi_psi_roundtrip", roundtrip_dev, 1e-12));
  rep.checks.push_back(tolerance("sections.kernel_weight", section_dev, 1e-9));

  bool cocycle = true;
  double transition_dev = 0.0;
  for (const auto& a : charts)
    for (const auto& b : charts) {
      const MonomialMap ab = transition_map(a, b);
      for (std::size_t s = 0; s < std::min<std::size_t>(samples, 3); ++s) {
        const ComplexVector xi = rng.polar_vector(n, 0.5, 2.0);
        transition_dev = std::max(transition_dev, rel_dev(phi_sigma(b, psi_sigma(a, xi)), ab.evaluate(xi)));
      }
      for (const auto& c : charts)
        cocycle = cocycle && compose(transition_map(b, c), ab).exponents == transition_map(a, c).exponents;
    }
  rep.checks.push_back(exact("charts.transition_cocycle", cocycle));
  rep.checks.push_back(tolerance("charts.transition_numeric", transition_dev, 1e-9));
}

void section_checks(const HalfspacePolytope& p, const Fan& fan, const SupportFunction& g, VerifyReport& rep) {
  const auto vertices = enumerate_vertices(p);
  bool equal = true;
  std::size_t size = 0;
  bool same_size = true;
  std::ostringstream detail;
  for (std::size_t k = 0; k < fan.max_cones().size(); ++k) {
    const auto by_conditions = sections_by_conditions(fan, g, k);
    const auto it = std::find_if(vertices.begin(), vertices.end(),
                                 [&](const Vertex& v) { return v.active == fan.max_cones()[k]; });
    const auto by_polytope = sections_by_polytope(p, *it);
    if (by_conditions.exponents != by_polytope.exponents) {
      equal = false;
      detail << "cone " << k << " differs; ";
    }
    if (k == 0) size = by_polytope.size();
    same_size = same_size && by_polytope.size() == size;
  }
  rep.checks.push_back(exact("sections.dual_method_equal", equal, detail.str()));
  rep.checks.push_back(exact("sections.count_chart_independent", same_size));
}

void numeric_checks(const HalfspacePolytope& p, std::size_t vertex, Sampler& rng, std::size_t samples,
                    VerifyReport& rep) {
  const auto vertices = enumerate_vertices(p);
  if (vertex >= vertices.size()) throw Error(Errc::invalid_argument, "vertex index out of range");
  const auto emb = sections_by_polytope(p, vertices[vertex]);
  const ToricPotential pot = ToricPotential::from_embedding(emb);
  const std::size_t n = pot.dim();

  double pullback = 0.0;
  for (std::size_t s = 0; s < samples; ++s) pullback = std::max(pullback, pullback_check(pot, rng.polar_vector(n, 0.1, 1.0)));
  rep.checks.push_back(tolerance("numeric.symplectic_pullback", pullback, 1e-4));

  double grad = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const auto x = rng.positive(n, 0.1, 10.0);
    for (std::size_t j = 0; j < n; ++j) {
      const double h = 1e-6 * std::max(1.0, std::abs(x[j]));
      auto xp = x, xm = x;
      xp[j] += h;
      xm[j] -= h;
      const double fd = (pot.value(std::span<const double>(xp)) - pot.value(std::span<const double>(xm))) / (2 * h);
      const double an = potential_partial(pot, x, j);
      grad = std::max(grad, std::abs(fd - an) / std::max(1e-12, std::abs(an)));
    }
  }
  rep.checks.push_back(tolerance("numeric.gradient_finite_difference", grad, 1e-5));

  double radial_excess = 0.0, cylinder_excess = 0.0, path_dev = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double cap = std::sqrt(2.0 * pot.max_exponent(j));
    for (std::size_t s = 0; s < std::max<std::size_t>(samples, 100); ++s) {
      radial_excess = std::max(radial_excess, radial_quantity(pot, rng.positive(n, 0.1, 10.0), j) - cap);
      const auto psi = psi_map(pot, rng.polar_vector(n, 0.1, 3.0));
      cylinder_excess = std::max(cylinder_excess, std::norm(psi[j]) - cap * cap);
    }
    const double limit = sup_along_path(pot, j, sufficient_path_exponent(pot, j), 1e6);
    path_dev = std::max(path_dev, std::abs(limit - cap));
  }
  rep.checks.push_back(exact("numeric.radial_bound", radial_excess <= 1e-12));
  rep.checks.push_back(exact("numeric.cylinder_containment", cylinder_excess <= 1e-12));
  rep.checks.push_back(tolerance("numeric.sup_along_path", path_dev, 1e-3));

  double worst = 0.0;
  for (std::size_t s = 0; s < std::max<std::size_t>(samples, 1000); ++s)
    worst = std::min(worst, fs_diastasis(rng.polar_vector(n, 0.0, 3.0)));
  rep.checks.push_back(exact("numeric.diastasis_nonnegative", worst >= 0.0));
}

}  // namespace

VerifyReport run_verification(const HalfspacePolytope& input, const VerifyOptions& options) {
  if (!is_delzant(input)) throw Error(Errc::not_delzant, "verify: polytope is not Delzant");
  const HalfspacePolytope p = scale(input, Rational(offset_denominator_lcm(input)));
  VerifyReport rep;
  Sampler rng(options.seed);
  const Fan fan = normal_fan(p);
  const SupportFunction g = support_function(p);
  rep.checks.push_back(exact("fan.smooth", is_smooth(fan)));
  rep.checks.push_back(exact("fan.complete", is_complete(fan) == Completeness::complete));
  rep.checks.push_back(exact("fan.strictly_convex", is_strictly_convex(fan, g)));
  chart_checks(fan, g, rng, options.samples, rep);
  section_checks(p, fan, g, rep);
  numeric_checks(p, options.vertex, rng, options.samples, rep);
  return rep;
}

}  // namespace delzant

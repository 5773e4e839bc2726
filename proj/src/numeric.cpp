#include "delzant/numeric.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>

namespace delzant {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// sum_l J_l log x_l with 0 * log 0 = 0.
double log_monomial(const std::vector<int>& j, std::span<const double> logx) {
  double s = 0.0;
  for (std::size_t l = 0; l < j.size(); ++l) {
    if (j[l] == 0) continue;
    if (logx[l] == kNegInf) return kNegInf;
    s += j[l] * logx[l];
  }
  return s;
}

std::vector<double> logs_of(std::span<const double> x) {
  std::vector<double> out;
  for (double v : x) {
    if (v < 0.0) throw Error(Errc::numeric_domain, "negative coordinate");
    out.push_back(v == 0.0 ? kNegInf : std::log(v));
  }
  return out;
}

double max_finite(std::span<const double> v) {
  double m = kNegInf;
  for (double x : v) m = std::max(m, x);
  return m;
}

// sqrt(2 sum (J_k)_j x^{J_k} / sum x^{J_k}) from log coordinates.
double radial_from_logs(const ToricPotential& t, std::span<const double> logx, std::size_t j) {
  std::vector<double> l;
  for (const auto& e : t.exponents()) l.push_back(log_monomial(e, logx));
  const double shift = max_finite(l);
  if (shift == kNegInf) throw Error(Errc::numeric_domain, "every monomial vanishes");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < l.size(); ++k) {
    const double w = std::exp(l[k] - shift);
    num += t.exponents()[k][j] * w;
    den += w;
  }
  return std::sqrt(2.0 * num / den);
}

void check_axis(const ToricPotential& t, std::size_t j, std::size_t len) {
  if (len != t.dim()) throw Error(Errc::dimension_mismatch, "point has wrong dimension");
  if (j >= t.dim()) throw Error(Errc::invalid_argument, "axis out of range");
}

std::vector<double> squared_moduli(std::span<const Complex> xi) {
  std::vector<double> x;
  for (const auto& z : xi) x.push_back(std::norm(z));
  return x;
}

ComplexVector from_real(const Eigen::VectorXd& q) {
  ComplexVector xi(static_cast<std::size_t>(q.size() / 2));
  for (std::size_t k = 0; k < xi.size(); ++k) xi[k] = Complex(q(2 * k), q(2 * k + 1));
  return xi;
}

Eigen::VectorXd to_real(std::span<const Complex> xi) {
  Eigen::VectorXd q(2 * xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k) {
    q(2 * k) = xi[k].real();
    q(2 * k + 1) = xi[k].imag();
  }
  return q;
}

}  // namespace

ToricPotential::ToricPotential(std::vector<std::vector<int>> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw Error(Errc::invalid_argument, "potential needs at least one exponent");
  dim_ = exponents_.front().size();
  if (dim_ == 0) throw Error(Errc::invalid_argument, "potential dimension must be positive");
  for (const auto& e : exponents_) {
    if (e.size() != dim_) throw Error(Errc::dimension_mismatch, "exponents of unequal length");
    if (std::any_of(e.begin(), e.end(), [](int v) { return v < 0; }))
      throw Error(Errc::invalid_argument, "negative exponent in potential");
  }
}

ToricPotential ToricPotential::from_embedding(const MonomialEmbedding& e) {
  std::vector<std::vector<int>> ex;
  for (const auto& j : e.exponents) {
    std::vector<int> row;
    for (const auto& v : j) {
      if (!v.fits_sint_p()) throw Error(Errc::numeric_domain, "exponent too large for a potential");
      row.push_back(static_cast<int>(v.get_si()));
    }
    ex.push_back(std::move(row));
  }
  return ToricPotential(std::move(ex));
}

int ToricPotential::max_exponent(std::size_t axis) const {
  int m = 0;
  for (const auto& e : exponents_) m = std::max(m, e.at(axis));
  return m;
}

double ToricPotential::value(std::span<const double> x) const {
  if (x.size() != dim_) throw Error(Errc::dimension_mismatch, "point has wrong dimension");
  const auto logx = logs_of(x);
  std::vector<double> l;
  for (const auto& e : exponents_) l.push_back(log_monomial(e, logx));
  const double shift = max_finite(l);
  if (shift == kNegInf) throw Error(Errc::numeric_domain, "every monomial vanishes");
  double s = 0.0;
  for (double v : l) s += std::exp(v - shift);
  return 2.0 * (shift + std::log(s));
}

double ToricPotential::value(std::span<const Complex> xi) const {
  const auto x = squared_moduli(xi);
  return value(std::span<const double>(x));
}

double potential_partial(const ToricPotential& t, std::span<const double> x, std::size_t j) {
  check_axis(t, j, x.size());
  for (double v : x)
    if (!(v > 0.0)) throw Error(Errc::numeric_domain, "potential_partial: coordinates must be positive");
  const double r = radial_from_logs(t, logs_of(x), j);
  return r * r / x[j];
}

double potential_partial_extended(const ToricPotential& t, std::span<const double> x, std::size_t j) {
  check_axis(t, j, x.size());
  const auto logx = logs_of(x);
  std::vector<double> den_logs, num_logs;
  std::vector<int> num_weights;
  for (const auto& e : t.exponents()) {
    den_logs.push_back(log_monomial(e, logx));
    if (e[j] > 0) {
      std::vector<int> lowered = e;
      --lowered[j];
      num_logs.push_back(log_monomial(lowered, logx));
      num_weights.push_back(e[j]);
    }
  }
  const double shift = std::max(max_finite(den_logs), max_finite(num_logs));
  if (max_finite(den_logs) == kNegInf) throw Error(Errc::numeric_domain, "every monomial vanishes");
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < num_logs.size(); ++k) num += num_weights[k] * std::exp(num_logs[k] - shift);
  for (double v : den_logs) den += std::exp(v - shift);
  return 2.0 * num / den;
}

ComplexVector psi_map(const ToricPotential& t, std::span<const Complex> xi) {
  if (xi.size() != t.dim()) throw Error(Errc::dimension_mismatch, "psi_map: wrong input length");
  const auto x = squared_moduli(xi);
  ComplexVector out(xi.size());
  for (std::size_t k = 0; k < xi.size(); ++k) {
    const double p = potential_partial_extended(t, x, k);
    if (!(p > 0.0)) throw Error(Errc::numeric_domain, "psi_map: partial derivative is not positive");
    out[k] = std::sqrt(p) * xi[k];
  }
  return out;
}

double pullback_check(const ToricPotential& t, std::span<const Complex> xi) {
  if (xi.size() != t.dim()) throw Error(Errc::dimension_mismatch, "pullback_check: wrong input length");
  const auto dim = static_cast<Eigen::Index>(2 * t.dim());
  const Eigen::VectorXd q0 = to_real(xi);

  auto psi_real = [&](const Eigen::VectorXd& q) {
    const auto z = from_real(q);
    return to_real(psi_map(t, z));
  };
  Eigen::MatrixXd jac(dim, dim);
  for (Eigen::Index b = 0; b < dim; ++b) {
    const double h = 1e-6 * std::max(1.0, std::abs(q0(b)));
    Eigen::VectorXd qp = q0, qm = q0;
    qp(b) += h;
    qm(b) -= h;
    jac.col(b) = (psi_real(qp) - psi_real(qm)) / (2.0 * h);
  }
  // Finite differences leave ~1e-10 noise, so rank is judged relative to the largest singular value.
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXd>(jac).singularValues();
  if (!(sv(dim - 1) > 1e-8 * sv(0))) throw Error(Errc::numeric_domain, "pullback_check: degenerate Jacobian");

  Eigen::MatrixXd omega0 = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; k += 2) {
    omega0(k, k + 1) = 1.0;
    omega0(k + 1, k) = -1.0;
  }
  const Eigen::MatrixXd pulled = jac.transpose() * omega0 * jac;

  auto phi = [&](const Eigen::VectorXd& q) { return t.value(std::span<const Complex>(from_real(q))); };
  const double h = 1e-4;
  Eigen::MatrixXd hess(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = a; b < dim; ++b) {
      Eigen::VectorXd pp = q0, pm = q0, mp = q0, mm = q0;
      pp(a) += h, pp(b) += h;
      pm(a) += h, pm(b) -= h;
      mp(a) -= h, mp(b) += h;
      mm(a) -= h, mm(b) -= h;
      hess(a, b) = hess(b, a) = (phi(pp) - phi(pm) - phi(mp) + phi(mm)) / (4.0 * h * h);
    }

  // h_{jk} = d^2 Phi / dxi_j dxi-bar_k, then omega(X, Y) = -Im(X^T h conj(Y)).
  const auto n = static_cast<Eigen::Index>(t.dim());
  Eigen::MatrixXcd herm(n, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (Eigen::Index k = 0; k < n; ++k)
      herm(j, k) = 0.25 * Complex(hess(2 * j, 2 * k) + hess(2 * j + 1, 2 * k + 1),
                                  hess(2 * j, 2 * k + 1) - hess(2 * j + 1, 2 * k));
  Eigen::MatrixXd omega(dim, dim);
  for (Eigen::Index a = 0; a < dim; ++a)
    for (Eigen::Index b = 0; b < dim; ++b) {
      const Complex xa = (a % 2 == 0) ? Complex(1, 0) : Complex(0, 1);
      const Complex yb = (b % 2 == 0) ? Complex(1, 0) : Complex(0, 1);
      omega(a, b) = -(xa * herm(a / 2, b / 2) * std::conj(yb)).imag();
    }
  return (pulled - omega).cwiseAbs().maxCoeff();
}

double radial_quantity(const ToricPotential& t, std::span<const double> x, std::size_t j) {
  check_axis(t, j, x.size());
  for (double v : x)
    if (!(v > 0.0)) throw Error(Errc::numeric_domain, "radial_quantity: coordinates must be positive");
  return radial_from_logs(t, logs_of(x), j);
}

double sup_along_path(const ToricPotential& t, std::size_t j, unsigned s, double t_max) {
  if (s < 1) throw Error(Errc::invalid_argument, "sup_along_path: s must be at least 1");
  if (!(t_max > 0.0)) throw Error(Errc::numeric_domain, "sup_along_path: t must be positive");
  check_axis(t, j, t.dim());
  std::vector<double> logx(t.dim(), std::log(t_max));
  logx[j] = s * std::log(t_max);
  return radial_from_logs(t, logx, j);
}

unsigned sufficient_path_exponent(const ToricPotential& t, std::size_t j) {
  check_axis(t, j, t.dim());
  int worst = 0;
  for (const auto& e : t.exponents()) {
    int rest = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (i != j) rest += e[i];
    worst = std::max(worst, rest);
  }
  return static_cast<unsigned>(worst + 1);
}

double fs_diastasis(std::span<const Complex> u) {
  double s = 0.0;
  for (const auto& z : u) s += std::norm(z);
  return std::log1p(s);
}

}  // namespace delzant

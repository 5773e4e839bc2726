#include "delzant/lattice.hpp"

#include <numeric>
#include <sstream>
#include <utility>

namespace delzant {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid_argument";
    case Errc::dimension_mismatch: return "dimension_mismatch";
    case Errc::not_unimodular: return "not_unimodular";
    case Errc::unbounded: return "unbounded";
    case Errc::empty: return "empty";
    case Errc::not_delzant: return "not_delzant";
    case Errc::not_integral: return "not_integral";
    case Errc::not_smooth: return "not_smooth";
    case Errc::not_strictly_convex: return "not_strictly_convex";
    case Errc::numeric_domain: return "numeric_domain";
    case Errc::parse: return "parse";
  }
  return "unknown";
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Integer> b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw Error(Errc::dimension_mismatch, "dot: length mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RationalVector to_rational(std::span<const Integer> v) {
  return RationalVector(v.begin(), v.end());
}

RationalMatrix to_rational(const IntMatrix& m) {
  RationalMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  return out;
}

bool is_integral(const Rational& q) { return q.get_den() == 1; }

bool is_integral(std::span<const Rational> v) {
  for (const auto& q : v)
    if (!is_integral(q)) return false;
  return true;
}

IntVector to_integer(std::span<const Rational> v) {
  IntVector out;
  out.reserve(v.size());
  for (const auto& q : v) {
    if (!is_integral(q)) throw Error(Errc::not_integral, "non-integral entry " + q.get_str());
    out.push_back(q.get_num());
  }
  return out;
}

IntMatrix to_integer(const RationalMatrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!is_integral(m(i, j))) throw Error(Errc::not_integral, "non-integral matrix entry");
      out(i, j) = m(i, j).get_num();
    }
  return out;
}

bool is_primitive(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g == 1;
}

Integer denominator_lcm(std::span<const Rational> v) {
  Integer l = 1;
  for (const auto& q : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

std::string to_string(std::span<const Integer> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

namespace {

struct Echelon {
  IntMatrix m;
  std::vector<std::size_t> pivot_cols;
  int sign = 1;
};

// Fraction-free row echelon form over the first `ncols` columns. Every
// division is exact: entries below the current pivot are minors of the input.
Echelon bareiss(IntMatrix a, std::size_t ncols) {
  Echelon e;
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < ncols && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
      e.sign = -e.sign;
    }
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      for (std::size_t j = c + 1; j < a.cols(); ++j) {
        Integer t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.m = std::move(a);
  return e;
}

// Scales each row by the lcm of its denominators so the result is integral.
IntMatrix clear_row_denominators(const RationalMatrix& m, std::vector<Integer>* scales) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const auto row = m.row(i);
    const Integer l = denominator_lcm(row);
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Rational scaled = row[j] * l;
      out(i, j) = scaled.get_num();
    }
    if (scales) scales->push_back(l);
  }
  return out;
}

}  // namespace

Integer det(const IntMatrix& m) {
  if (!m.square()) throw Error(Errc::dimension_mismatch, "det: matrix is not square");
  if (m.rows() == 0) return 1;
  const auto e = bareiss(m, m.cols());
  if (e.pivot_cols.size() < m.rows()) return 0;
  return e.sign * e.m(m.rows() - 1, m.cols() - 1);
}

Rational det(const RationalMatrix& m) {
  if (!m.square()) throw Error(Errc::dimension_mismatch, "det: matrix is not square");
  std::vector<Integer> scales;
  const IntMatrix scaled = clear_row_denominators(m, &scales);
  Rational d = det(scaled);
  for (const auto& s : scales) d /= s;
  return d;
}

bool is_z_basis(std::span<const IntVector> vectors) {
  const std::size_t n = vectors.size();
  if (n == 0) throw Error(Errc::invalid_argument, "is_z_basis: empty vector list");
  for (const auto& v : vectors)
    if (v.size() != n) throw Error(Errc::dimension_mismatch, "is_z_basis: need n vectors of length n");
  const Integer d = det(IntMatrix::from_columns(vectors));
  return abs(d) == 1;
}

std::optional<RationalVector> solve_rational(const RationalMatrix& m, std::span<const Rational> b) {
  if (!m.square()) throw Error(Errc::dimension_mismatch, "solve: matrix is not square");
  if (b.size() != m.rows()) throw Error(Errc::dimension_mismatch, "solve: right-hand side length mismatch");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n) = b[i];
  }
  const auto e = bareiss(clear_row_denominators(aug, nullptr), n);
  if (e.pivot_cols.size() < n) return std::nullopt;
  RationalVector x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Rational s = e.m(ii, n);
    for (std::size_t j = ii + 1; j < n; ++j) s -= Rational(e.m(ii, j)) * x[j];
    x[ii] = s / Rational(e.m(ii, ii));
  }
  return x;
}

std::size_t rank(const RationalMatrix& m) {
  return bareiss(clear_row_denominators(m, nullptr), m.cols()).pivot_cols.size();
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  const Integer d = det(m);
  if (abs(d) != 1) throw Error(Errc::not_unimodular, "inverse_unimodular: determinant is " + d.get_str());
  const std::size_t n = m.rows();
  const RationalMatrix mq = to_rational(m);
  IntMatrix inv(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    RationalVector e(n);
    e[c] = 1;
    const auto x = solve_rational(mq, e);
    const auto xi = to_integer(*x);
    for (std::size_t r = 0; r < n; ++r) inv(r, c) = xi[r];
  }
  return inv;
}

IntVector orthogonal_complement(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() + 1 != n) throw Error(Errc::dimension_mismatch, "orthogonal_complement: need n-1 rows");
  IntVector out(n);
  for (std::size_t k = 0; k < n; ++k) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 0; i + 1 < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j) {
        if (j == k) continue;
        minor(i, jj++) = m(i, j);
      }
    out[k] = (k % 2 == 0 ? 1 : -1) * det(minor);
  }
  return out;
}

}  // namespace delzant

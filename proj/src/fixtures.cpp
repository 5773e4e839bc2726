#include "delzant/fixtures.hpp"

#include <charconv>
#include <vector>

namespace delzant::fixtures {

namespace {

std::vector<IntVector> plane_normals(std::initializer_list<std::pair<int, int>> pairs) {
  std::vector<IntVector> out;
  for (auto [a, b] : pairs) out.push_back({a, b});
  return out;
}

std::optional<unsigned> parse_unsigned(std::string_view s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

}  // namespace

HalfspacePolytope blown_up_hirzebruch() {
  return HalfspacePolytope(2, plane_normals({{1, 0}, {0, 1}, {1, -1}, {-1, 1}, {1, -2}, {0, -1}}),
                           {0, 0, -1, -1, -3, -3});
}

HalfspacePolytope iterated_blowup_plane(unsigned m) {
  if (m < 1) throw Error(Errc::invalid_argument, "iterated_blowup_plane: m must be >= 1");
  Rational last(-2 * static_cast<long>(m), static_cast<long>(m) + 1);
  last.canonicalize();
  return HalfspacePolytope(2, plane_normals({{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}, {2, -1}}),
                           {0, 0, -2, -4, -4, -2, last});
}

HalfspacePolytope projective_space(unsigned n, unsigned degree) {
  if (n < 1 || degree < 1) throw Error(Errc::invalid_argument, "projective_space: n and degree must be >= 1");
  std::vector<IntVector> normals;
  RationalVector offsets;
  for (unsigned i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    normals.push_back(std::move(e));
    offsets.emplace_back(0);
  }
  normals.emplace_back(n, Integer(-1));
  offsets.emplace_back(-static_cast<long>(degree));
  return HalfspacePolytope(n, std::move(normals), std::move(offsets));
}

HalfspacePolytope hirzebruch(unsigned k) {
  const long kk = k;
  return HalfspacePolytope(2, plane_normals({{1, 0}, {0, 1}, {0, -1}, {-1, static_cast<int>(-kk)}}),
                           {0, 0, -1, -(kk + 1)});
}

HalfspacePolytope product_of_lines() {
  return HalfspacePolytope(2, plane_normals({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}), {0, 0, -1, -1});
}

std::optional<HalfspacePolytope> resolve(std::string_view name) {
  const auto parts = split(name, ':');
  if (parts[0] == "example-3.7" && parts.size() == 1) return blown_up_hirzebruch();
  if (parts[0] == "cp1xcp1" && parts.size() == 1) return product_of_lines();
  if (parts[0] == "example-3.8" && parts.size() == 2) {
    const auto m = parse_unsigned(parts[1]);
    if (!m || *m < 1) throw Error(Errc::parse, "example-3.8 needs an integer m >= 1");
    return iterated_blowup_plane(*m);
  }
  if (parts[0] == "cpn" && (parts.size() == 2 || parts.size() == 3)) {
    const auto n = parse_unsigned(parts[1]);
    const auto deg = parts.size() == 3 ? parse_unsigned(parts[2]) : std::optional<unsigned>(1);
    if (!n || !deg || *n < 1 || *deg < 1) throw Error(Errc::parse, "cpn needs cpn:<n>:<degree> with n, degree >= 1");
    return projective_space(*n, *deg);
  }
  if (parts[0] == "hirzebruch" && parts.size() == 2) {
    const auto k = parse_unsigned(parts[1]);
    if (!k) throw Error(Errc::parse, "hirzebruch needs an integer k >= 0");
    return hirzebruch(*k);
  }
  return std::nullopt;
}

}  // namespace delzant::fixtures

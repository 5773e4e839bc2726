#include "delzant/io.hpp"

#include <algorithm>
#include <regex>

namespace delzant::io {

namespace {

const std::regex& rational_pattern() {
  static const std::regex re(R"(^\s*[-+]?\d+(\s*/\s*\d+)?\s*$)");
  return re;
}

}  // namespace

Rational parse_rational(const Json& value) {
  if (value.is_number_integer()) return Rational(Integer(value.dump()));
  if (!value.is_string()) throw Error(Errc::parse, "expected a rational (string \"p/q\" or integer)");
  std::string s = value.get<std::string>();
  if (!std::regex_match(s, rational_pattern())) throw Error(Errc::parse, "malformed rational \"" + s + "\"");
  s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return c == ' ' || c == '+'; }), s.end());
  Rational q;
  if (q.set_str(s, 10) != 0) throw Error(Errc::parse, "malformed rational \"" + s + "\"");
  if (q.get_den() == 0) throw Error(Errc::parse, "zero denominator in \"" + s + "\"");
  q.canonicalize();
  return q;
}

Integer parse_integer(const Json& value) {
  const Rational q = parse_rational(value);
  if (!is_integral(q)) throw Error(Errc::parse, "expected an integer, got " + q.get_str());
  return q.get_num();
}

std::string format_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

HalfspacePolytope polytope_from_json(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Errc::parse, "polytope must be a JSON object");
  for (const char* key : {"dim", "normals", "offsets"})
    if (!doc.contains(key)) throw Error(Errc::parse, std::string("missing field \"") + key + "\"");
  if (!doc["dim"].is_number_unsigned() || doc["dim"].get<std::size_t>() == 0)
    throw Error(Errc::parse, "\"dim\" must be a positive integer");
  if (!doc["normals"].is_array() || !doc["offsets"].is_array())
    throw Error(Errc::parse, "\"normals\" and \"offsets\" must be arrays");
  const auto dim = doc["dim"].get<std::size_t>();
  std::vector<IntVector> normals;
  for (const auto& row : doc["normals"]) {
    if (!row.is_array()) throw Error(Errc::parse, "each normal must be an array");
    IntVector u;
    for (const auto& x : row) u.push_back(parse_integer(x));
    normals.push_back(std::move(u));
  }
  RationalVector offsets;
  for (const auto& x : doc["offsets"]) offsets.push_back(parse_rational(x));
  try {
    return HalfspacePolytope(dim, std::move(normals), std::move(offsets));
  } catch (const Error& e) {
    throw Error(Errc::parse, e.what());
  }
}

Json vector_to_json(std::span<const Integer> v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p())
      out.push_back(x.get_si());
    else
      out.push_back(x.get_str());
  }
  return out;
}

Json vector_to_json(std::span<const Rational> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_rational(x));
  return out;
}

Json polytope_to_json(const HalfspacePolytope& p) {
  Json out;
  out["dim"] = p.dim();
  out["normals"] = Json::array();
  for (const auto& u : p.normals()) out["normals"].push_back(vector_to_json(u));
  out["offsets"] = vector_to_json(std::span<const Rational>(p.offsets()));
  return out;
}

Json fan_to_json(const Fan& f) {
  Json out;
  out["generators"] = Json::array();
  for (const auto& u : f.generators()) out["generators"].push_back(vector_to_json(u));
  out["max_cones"] = f.max_cones();
  return out;
}

Json embedding_to_json(const MonomialEmbedding& e) {
  Json out = Json::array();
  for (const auto& j : e.exponents) out.push_back(vector_to_json(j));
  return out;
}

Json width_to_json(const WidthReport& r) {
  Json out;
  out["vertex"] = r.vertex;
  out["vertex_point"] = vector_to_json(std::span<const Rational>(r.vertex_data.point));
  out["denominator_scale"] = r.denominator_scale.get_str();
  out["paper_bound_pi"] = format_rational(r.paper.coefficient_pi);
  out["radius_sq"] = format_rational(r.paper.radius_sq);
  out["axis_maxima"] = vector_to_json(r.paper.axis_maxima);
  out["embedding_size"] = r.embedding.size();
  out["lu_lambda_pi"] = r.lambda.coefficient_pi ? Json(format_rational(*r.lambda.coefficient_pi)) : Json(nullptr);
  out["lu_lambda_value"] = r.lambda.value ? Json(format_rational(*r.lambda.value)) : Json(nullptr);
  out["fano"] = r.fano.has_value();
  if (r.fano) {
    Json cert;
    cert["r"] = format_rational(r.fano->r);
    cert["m"] = vector_to_json(std::span<const Rational>(r.fano->m));
    cert["signs"] = r.fano->signs;
    out["fano_certificate"] = cert;
  } else {
    out["fano_certificate"] = nullptr;
  }
  out["lu_gamma_pi"] = r.gamma.coefficient_pi ? Json(format_rational(*r.gamma.coefficient_pi)) : Json(nullptr);
  out["lu_gamma_search_bound"] = r.gamma.search_bound;
  out["lu_gamma_note"] = r.fano ? "infimum searched over relations with sum(a) <= search bound"
                                : "not applied: no Fano certificate; deformation-equivalence "
                                  "arguments for non-Fano manifolds are not used";
  out["min_bound_pi"] = format_rational(r.min_bound_pi);
  out["min_bound_source"] = r.min_source;
  Json w;
  w["paper_bound_axis"] = r.paper.axis;
  w["lu_lambda"] = r.lambda.value ? vector_to_json(r.lambda.witness) : Json(nullptr);
  w["lu_lambda_maximizers"] = r.lambda.maximizers;
  w["lu_gamma"] = r.gamma.value ? vector_to_json(r.gamma.witness) : Json(nullptr);
  out["witnesses"] = w;
  return out;
}

Json analyze(const HalfspacePolytope& p) {
  Json out;
  out["dim"] = p.dim();
  out["facets"] = p.facet_count();
  const auto vertices = enumerate_vertices(p);  // throws on unbounded / empty input
  out["bounded"] = true;
  out["vertices"] = Json::array();
  for (const auto& v : vertices) {
    Json jv;
    jv["point"] = vector_to_json(std::span<const Rational>(v.point));
    jv["active"] = v.active;
    out["vertices"].push_back(jv);
  }
  const auto report = delzant_report(p);
  out["delzant"] = report.delzant;
  out["vertex_checks"] = Json::array();
  for (const auto& c : report.vertices) {
    Json jc;
    jc["vertex"] = c.vertex;
    jc["active"] = c.active;
    jc["det"] = c.det.get_str();
    jc["ok"] = c.ok;
    out["vertex_checks"].push_back(jc);
  }
  out["lattice_point_count"] = lattice_points(p).size();

  const bool simple = std::all_of(vertices.begin(), vertices.end(),
                                  [&](const Vertex& v) { return v.active.size() == p.dim(); });
  out["simple"] = simple;
  if (!simple) {
    out["smooth"] = nullptr;
    out["complete"] = nullptr;
    out["strictly_convex"] = nullptr;
    out["fan"] = nullptr;
    return out;
  }
  const Fan fan = normal_fan_of_simple(p);
  out["smooth"] = is_smooth(fan);
  out["complete"] = to_string(is_complete(fan));
  // Strict convexity is scale invariant; test it on the integral multiple.
  const Integer q = offset_denominator_lcm(p);
  out["support_scale"] = q.get_str();
  if (report.delzant)
    out["strictly_convex"] = is_strictly_convex(fan, support_function(scale(p, Rational(q))));
  else
    out["strictly_convex"] = nullptr;
  out["fan"] = fan_to_json(fan);
  return out;
}

}  // namespace delzant::io

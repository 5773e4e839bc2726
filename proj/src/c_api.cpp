#include "delzant/delzant.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "delzant/fixtures.hpp"
#include "delzant/io.hpp"
#include "delzant/verify.hpp"

struct dz_polytope {
  delzant::HalfspacePolytope value;
};

namespace {

thread_local std::string last_error;

dz_status status_for(delzant::Errc code) {
  using delzant::Errc;
  switch (code) {
    case Errc::parse:
      return DZ_ERR_PARSE;
    case Errc::unbounded:
    case Errc::empty:
      return DZ_ERR_INFEASIBLE;
    case Errc::not_delzant:
    case Errc::not_smooth:
    case Errc::not_strictly_convex:
      return DZ_ERR_NOT_DELZANT;
    case Errc::numeric_domain:
      return DZ_ERR_NUMERIC;
    default:
      return DZ_ERR_INVALID_ARGUMENT;
  }
}

char* copy_out(const std::string& s) {
  char* buf = static_cast<char*>(std::malloc(s.size() + 1));
  if (!buf) throw std::bad_alloc();
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return buf;
}

template <class F>
dz_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const delzant::Error& e) {
    last_error = e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    last_error = e.what();
    return DZ_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return DZ_ERR_INTERNAL;
  }
}

dz_status check_args(const void* p, const void* out) {
  if (p && out) return DZ_OK;
  last_error = "null argument";
  return DZ_ERR_INVALID_ARGUMENT;
}

std::size_t pick_vertex(const delzant::HalfspacePolytope& p, long vertex) {
  if (vertex < 0) return 0;
  const auto count = delzant::enumerate_vertices(p).size();
  if (static_cast<std::size_t>(vertex) >= count)
    throw delzant::Error(delzant::Errc::invalid_argument,
                         "vertex " + std::to_string(vertex) + " out of range (" + std::to_string(count) + " vertices)");
  return static_cast<std::size_t>(vertex);
}

std::string dump(const delzant::io::Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

dz_status dz_polytope_from_json(const char* text, dz_polytope** out) {
  if (auto s = check_args(text, out)) return s;
  return guarded([&] {
    *out = new dz_polytope{delzant::io::polytope_from_json(text)};
    return DZ_OK;
  });
}

dz_status dz_polytope_from_fixture(const char* name, dz_polytope** out) {
  if (auto s = check_args(name, out)) return s;
  return guarded([&] {
    auto p = delzant::fixtures::resolve(name);
    if (!p) throw delzant::Error(delzant::Errc::parse, std::string("unknown fixture \"") + name + "\"");
    *out = new dz_polytope{std::move(*p)};
    return DZ_OK;
  });
}

void dz_polytope_free(dz_polytope* p) { delete p; }

dz_status dz_polytope_to_json(const dz_polytope* p, char** out) {
  if (auto s = check_args(p, out)) return s;
  return guarded([&] {
    *out = copy_out(dump(delzant::io::polytope_to_json(p->value)));
    return DZ_OK;
  });
}

dz_status dz_analyze(const dz_polytope* p, char** out) {
  if (auto s = check_args(p, out)) return s;
  return guarded([&] {
    *out = copy_out(dump(delzant::io::analyze(p->value)));
    return DZ_OK;
  });
}

dz_status dz_width(const dz_polytope* p, long vertex, char** out) {
  if (auto s = check_args(p, out)) return s;
  return guarded([&] {
    const auto report = delzant::width_report(p->value, pick_vertex(p->value, vertex));
    *out = copy_out(dump(delzant::io::width_to_json(report)));
    return DZ_OK;
  });
}

dz_status dz_embed(const dz_polytope* p, long vertex, char** out) {
  if (auto s = check_args(p, out)) return s;
  return guarded([&] {
    if (!delzant::is_delzant(p->value))
      throw delzant::Error(delzant::Errc::not_delzant, "embed: polytope is not Delzant");
    // Same denominator clearing as the width report.
    const auto scaled = delzant::scale(p->value, delzant::Rational(delzant::offset_denominator_lcm(p->value)));
    const auto vertices = delzant::enumerate_vertices(scaled);
    const auto emb = delzant::sections_by_polytope(scaled, vertices[pick_vertex(scaled, vertex)]);
    *out = copy_out(delzant::io::embedding_to_json(emb).dump() + "\n");
    return DZ_OK;
  });
}

dz_status dz_verify(const dz_polytope* p, uint64_t seed, size_t samples, char** out) {
  if (auto s = check_args(p, out)) return s;
  return guarded([&] {
    delzant::VerifyOptions opt;
    opt.seed = seed;
    opt.samples = samples;
    const auto rep = delzant::run_verification(p->value, opt);
    delzant::io::Json j;
    j["seed"] = seed;
    j["samples"] = samples;
    j["checks"] = delzant::io::Json::array();
    for (const auto& c : rep.checks) {
      delzant::io::Json jc;
      jc["name"] = c.name;
      jc["passed"] = c.passed;
      jc["observed"] = c.observed;
      jc["tolerance"] = c.tolerance;
      if (!c.detail.empty()) jc["detail"] = c.detail;
      j["checks"].push_back(jc);
    }
    j["all_passed"] = rep.all_passed();
    *out = copy_out(dump(j));
    if (rep.all_passed()) return DZ_OK;
    last_error = "verify: some checks failed";
    return DZ_ERR_CHECK_FAILED;
  });
}

void dz_string_free(char* s) { std::free(s); }

const char* dz_last_error(void) { return last_error.c_str(); }

const char* dz_status_name(dz_status s) {
  switch (s) {
    case DZ_OK: return "ok";
    case DZ_ERR_INVALID_ARGUMENT: return "invalid argument";
    case DZ_ERR_PARSE: return "parse error";
    case DZ_ERR_INFEASIBLE: return "infeasible or unbounded polytope";
    case DZ_ERR_CHECK_FAILED: return "check failed";
    case DZ_ERR_NOT_DELZANT: return "not Delzant";
    case DZ_ERR_NUMERIC: return "numeric domain error";
    case DZ_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

}  // extern "C"

#pragma once

// JSON encodings. Rationals are written as "p/q" strings (plain "p" when
// integral) so exact reports never pass through floating point.
//
// Polytope file format:
//   { "dim": n, "normals": [[...], ...], "offsets": ["p/q", ...] }
// Offsets and normal entries may also be given as JSON integers.

#include <string>
#include <string_view>

#include "json.hpp"

#include "delzant/embedding.hpp"
#include "delzant/fan.hpp"
#include "delzant/polytope.hpp"
#include "delzant/width.hpp"

namespace delzant::io {

using Json = nlohmann::ordered_json;

Rational parse_rational(const Json& value);
Integer parse_integer(const Json& value);
std::string format_rational(const Rational& q);

/// Throws Error(Errc::parse) on malformed input.
HalfspacePolytope polytope_from_json(std::string_view text);
Json polytope_to_json(const HalfspacePolytope& p);

Json vector_to_json(std::span<const Integer> v);
Json vector_to_json(std::span<const Rational> v);
Json fan_to_json(const Fan& f);
Json embedding_to_json(const MonomialEmbedding& e);
Json width_to_json(const WidthReport& r);

/// Delzant / smooth / complete / strictly-convex flags, vertices and the
/// lattice point count.
Json analyze(const HalfspacePolytope& p);

}  // namespace delzant::io

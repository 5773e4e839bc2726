#pragma once

// Built-in polytopes. The names accepted by resolve_fixture are
//   example-3.7            Hirzebruch surface S_2 blown up at two points
//   example-3.8:<m>        plane blown up at three points, then once more
//   cpn:<n>:<degree>       degree * standard simplex in R^n
//   hirzebruch:<k>         { x >= 0, 0 <= y <= 1, x + k y <= k + 1 }
//   cp1xcp1                unit square

#include <optional>
#include <string>
#include <string_view>

#include "delzant/polytope.hpp"

namespace delzant::fixtures {

/// x1 >= 0, x2 >= 0, x1 - x2 >= -1, x2 - x1 >= -1, x1 - 2 x2 >= -3, x2 <= 3.
HalfspacePolytope blown_up_hirzebruch();

/// 0 <= x1, x2 <= 4, -2 <= x1 - x2 <= 2, 2 x1 - x2 >= -2m/(m+1); m >= 1.
HalfspacePolytope iterated_blowup_plane(unsigned m);

HalfspacePolytope projective_space(unsigned n, unsigned degree = 1);
HalfspacePolytope hirzebruch(unsigned k);
HalfspacePolytope product_of_lines();

/// Resolves a fixture name; nullopt when the name is not a fixture.
std::optional<HalfspacePolytope> resolve(std::string_view name);

}  // namespace delzant::fixtures

#pragma once

#include <stdexcept>
#include <string>

namespace delzant {

enum class Errc {
  invalid_argument,
  dimension_mismatch,
  not_unimodular,
  unbounded,
  empty,
  not_delzant,
  not_integral,
  not_smooth,
  not_strictly_convex,
  numeric_domain,
  parse,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace delzant

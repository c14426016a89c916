#pragma once

#include <stdexcept>
#include <string>

namespace curvecfg {

enum class Errc {
  invalid_argument,
  not_validated,
  no_singular_points,
  unsupported_degree,
  degenerate_intersection,
  duplicate_line,
  generation_failure,
  precision_exhausted,
  domain,
  no_limit,
  unsupported,
  pencil,
  size,
  invalid_surface,
  undefined_gamma,
  out_of_range,
  wrong_checker,
  parse,
};

const char* errc_name(Errc code);

class CurveError : public std::runtime_error {
 public:
  CurveError(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace curvecfg

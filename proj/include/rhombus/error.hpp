#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rhombus {

enum class Errc {
  not_squarefree,
  root_count_not_one,
  division_by_zero,
  field_mismatch,
  not_invertible,
  degenerate_slope,
  all_zero,
  singular_offset,
  patch_too_small,
  no_lift,
  non_unique,
  not_codim_two,
  inconsistent,
  inconsistent_constraints,
  rank_deficient,
  slopes_intersect,
  no_other_real_root,
  radius_mismatch,
  invalid_argument,
  parse_error,
};

std::string_view errc_name(Errc code) noexcept;

/// Every library failure is reported through this exception; `code()` names
/// the condition so callers (and the CLI) can branch on it.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace rhombus

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace propsim {

/// Stable error categories. The CLI prints `code_name()` as a one-line prefix.
enum class ErrorCode {
  domain,
  validation,
  range,
  singularity,
  degenerate_fit,
  constant_column,
  zero_dispersion,
  division,
  dimension_mismatch,
  undefined_interiority,
  degenerate_graph,
  labels_required,
  usage,
  io,
};

std::string_view code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace propsim

#include "propsim/error.hpp"

namespace propsim {

std::string_view code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "E_DOMAIN";
    case ErrorCode::validation: return "E_VALIDATION";
    case ErrorCode::range: return "E_RANGE";
    case ErrorCode::singularity: return "E_SINGULARITY";
    case ErrorCode::degenerate_fit: return "E_DEGENERATE_FIT";
    case ErrorCode::constant_column: return "E_CONSTANT_COLUMN";
    case ErrorCode::zero_dispersion: return "E_ZERO_DISPERSION";
    case ErrorCode::division: return "E_DIVISION";
    case ErrorCode::dimension_mismatch: return "E_DIMENSION";
    case ErrorCode::undefined_interiority: return "E_UNDEFINED_INTERIORITY";
    case ErrorCode::degenerate_graph: return "E_DEGENERATE_GRAPH";
    case ErrorCode::labels_required: return "E_LABELS_REQUIRED";
    case ErrorCode::usage: return "E_USAGE";
    case ErrorCode::io: return "E_IO";
  }
  return "E_UNKNOWN";
}

}  // namespace propsim

#include "schober/error.hpp"

namespace schober {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

}  // namespace schober

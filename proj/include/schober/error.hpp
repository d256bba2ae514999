#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace schober {

enum class ErrorKind {
  DimensionMismatch,
  Singular,
  NotInSpan,
  IndexOutOfRange,
  ArityMismatch,
  InvalidInput,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library; callers dispatch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace schober

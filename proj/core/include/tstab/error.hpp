#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tstab {

enum class ErrorCode {
  ArityMismatch,
  LengthMismatch,
  ZeroClass,
  NotPositive,
  CrossFamily,
  UnsupportedFamily,
  InvalidShuffle,
  NonConsecutiveBlocks,
  InvalidPartition,
  InvalidCut,
  Unbounded,
  BadParams,
  NotSlopeDescribable,
  HomViolation,
  QOutOfRange,
  SyntaxError,
  InvalidLength,
  NonCoprime,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure the library reports on bad domain input is a DomainError;
// the CLI maps these to exit code 1.
class DomainError : public std::runtime_error {
 public:
  DomainError(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Parse failures also carry the byte offset into the input text.
class SyntaxError : public DomainError {
 public:
  SyntaxError(ErrorCode code, std::size_t position, const std::string& what)
      : DomainError(code, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace tstab

#pragma once

#include <exbook/report.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace exbook {

enum class ErrorCode {
  SyntaxError,
  SchemaError,
  ConstraintError,
  UnsupportedLegacyKind,
  ValidationFailed,
  MissingAsset,
  MissingFormat,
  AssetCollision,
  KindMismatch,
  ShapeMismatch,
  Ungradeable,
  NotACloze,
  NotShuffleable,
  PathCollision,
  DanglingFragment,
  NotAZip,
  Io,
};

std::string_view error_code_name(ErrorCode code);

struct SourceLocation {
  std::size_t line = 0;
  std::size_t column = 0;
};

// Every failure raised by the library. Parsers attach a location, validators
// attach the report that caused the failure.
class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &message);
  Error(ErrorCode code, const std::string &message, SourceLocation where);
  Error(ErrorCode code, const std::string &message, Report report);
  Error(ErrorCode code, const std::string &message, std::optional<SourceLocation> where, Report report);

  /// Same error with "<context>: " in front of the message.
  Error with_context(std::string_view context) const;

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourceLocation> &location() const noexcept { return location_; }
  const Report &report() const noexcept { return report_; }

private:
  ErrorCode code_;
  std::optional<SourceLocation> location_;
  Report report_;
};

} // namespace exbook

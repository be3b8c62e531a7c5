#include <exbook/error.hpp>
#include <exbook/report.hpp>

#include <json.hpp>

#include <algorithm>

namespace exbook {

std::string_view severity_name(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

void Report::error(std::string code, std::string path, std::string message) {
  findings_.push_back({Severity::Error, std::move(code), std::move(path), std::move(message)});
}

void Report::warning(std::string code, std::string path, std::string message) {
  findings_.push_back({Severity::Warning, std::move(code), std::move(path), std::move(message)});
}

void Report::add(Finding finding) { findings_.push_back(std::move(finding)); }

void Report::append(const Report &other) {
  findings_.insert(findings_.end(), other.findings_.begin(), other.findings_.end());
}

void Report::promote_warnings() {
  for(auto &f : findings_) {
    f.severity = Severity::Error;
  }
}

std::size_t Report::error_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(findings_.begin(), findings_.end(), [](const Finding &f) {
    return f.severity == Severity::Error;
  }));
}

std::size_t Report::warning_count() const noexcept { return findings_.size() - error_count(); }

bool Report::contains(std::string_view code, std::string_view needle) const {
  return std::any_of(findings_.begin(), findings_.end(), [&](const Finding &f) {
    if(f.code != code) {
      return false;
    }
    if(needle.empty()) {
      return true;
    }
    return f.message.find(needle) != std::string::npos || f.path.find(needle) != std::string::npos;
  });
}

std::string Report::to_text() const {
  std::string out;
  for(const auto &f : findings_) {
    out += severity_name(f.severity);
    out += ' ';
    out += f.code;
    if(!f.path.empty()) {
      out += " [";
      out += f.path;
      out += ']';
    }
    out += ": ";
    out += f.message;
    out += '\n';
  }
  return out;
}

std::string Report::to_json() const {
  auto records = nlohmann::json::array();
  for(const auto &f : findings_) {
    records.push_back({{"severity", severity_name(f.severity)},
                       {"code", f.code},
                       {"path", f.path},
                       {"message", f.message}});
  }
  return nlohmann::json{{"errors", error_count()}, {"warnings", warning_count()}, {"findings", records}}.dump(2);
}

std::string_view error_code_name(ErrorCode code) {
  switch(code) {
  case ErrorCode::SyntaxError: return "SyntaxError";
  case ErrorCode::SchemaError: return "SchemaError";
  case ErrorCode::ConstraintError: return "ConstraintError";
  case ErrorCode::UnsupportedLegacyKind: return "UnsupportedLegacyKind";
  case ErrorCode::ValidationFailed: return "ValidationFailed";
  case ErrorCode::MissingAsset: return "MissingAsset";
  case ErrorCode::MissingFormat: return "MissingFormat";
  case ErrorCode::AssetCollision: return "AssetCollision";
  case ErrorCode::KindMismatch: return "KindMismatch";
  case ErrorCode::ShapeMismatch: return "ShapeMismatch";
  case ErrorCode::Ungradeable: return "Ungradeable";
  case ErrorCode::NotACloze: return "NotACloze";
  case ErrorCode::NotShuffleable: return "NotShuffleable";
  case ErrorCode::PathCollision: return "PathCollision";
  case ErrorCode::DanglingFragment: return "DanglingFragment";
  case ErrorCode::NotAZip: return "NotAZip";
  case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string &message)
    : std::runtime_error(message), code_(code) {}

Error::Error(ErrorCode code, const std::string &message, SourceLocation where)
    : std::runtime_error(message), code_(code), location_(where) {}

Error::Error(ErrorCode code, const std::string &message, Report report)
    : std::runtime_error(message), code_(code), report_(std::move(report)) {}

Error::Error(ErrorCode code, const std::string &message, std::optional<SourceLocation> where, Report report)
    : std::runtime_error(message), code_(code), location_(where), report_(std::move(report)) {}

Error Error::with_context(std::string_view context) const {
  return Error(code_, std::string(context) + ": " + what(), location_, report_);
}

} // namespace exbook

#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace exbook {

enum class Severity { Warning, Error };

struct Finding {
  Severity severity = Severity::Error;
  std::string code;
  std::string path;
  std::string message;

  bool operator==(const Finding &) const = default;
};

/// Ordered list of findings shared by the definition, anchor, asset and
/// container checks. Order is insertion order, which every producer keeps
/// deterministic.
class Report {
public:
  void error(std::string code, std::string path, std::string message);
  void warning(std::string code, std::string path, std::string message);
  void add(Finding finding);
  void append(const Report &other);

  /// Re-tags every warning as an error (strict builds).
  void promote_warnings();

  const std::vector<Finding> &findings() const noexcept { return findings_; }
  std::size_t error_count() const noexcept;
  std::size_t warning_count() const noexcept;
  bool has_errors() const noexcept { return error_count() > 0; }
  bool empty() const noexcept { return findings_.empty(); }

  /// True when some finding carries `code` (and, if non-empty, mentions `needle`).
  bool contains(std::string_view code, std::string_view needle = {}) const;

  std::string to_text() const;
  std::string to_json() const;

private:
  std::vector<Finding> findings_;
};

std::string_view severity_name(Severity s);

} // namespace exbook

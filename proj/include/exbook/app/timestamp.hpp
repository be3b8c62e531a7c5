#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace exbook::app {

inline constexpr std::string_view kTimestampEnv = "EXBOOK_BUILD_TIMESTAMP";

/// Accepts Unix seconds ("1394496000") or ISO 8601 UTC forms
/// ("2014-03-11", "2014-03-11T00:00:00Z", "2014-03-11T01:00:00+01:00").
/// Throws std::invalid_argument otherwise.
std::int64_t parse_timestamp(std::string_view text);

/// Flag value, else the environment variable, else the Unix epoch.
std::int64_t resolve_timestamp(const std::optional<std::string_view> &flag);

} // namespace exbook::app

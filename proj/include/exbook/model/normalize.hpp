#pragma once

#include <exbook/model/types.hpp>

#include <string>
#include <string_view>

namespace exbook::model {

/// Applies canonical composition, then the folds the policy enables: case
/// folding, combining-mark removal, whitespace collapsing with trimming.
/// Idempotent for a fixed policy. Ill-formed UTF-8 is replaced with U+FFFD.
std::string normalize_text(std::string_view text, const NormalizationPolicy &policy);

/// True when `typed` normalizes to the same string as any accepted answer.
bool matches_any(std::string_view typed, const std::vector<std::string> &accepted,
                 const NormalizationPolicy &policy);

/// Number of Unicode code points after NFC composition.
std::size_t composed_length(std::string_view text);

} // namespace exbook::model

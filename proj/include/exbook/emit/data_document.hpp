#pragma once

#include <exbook/ingest/assets.hpp>
#include <exbook/ingest/manifest.hpp>
#include <exbook/model/types.hpp>

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace exbook::emit {

inline constexpr std::string_view kPageDataFormat = "exbook-page-data/1";

using StringTable = std::map<std::string, std::string>;

/// Keys every table carries. The runtime never shows a string that is not
/// looked up through one of these.
const std::vector<std::string_view> &ui_string_keys();

/// Built-in table for the tag's primary language (en, fr, de; anything else
/// gets English), overlaid with the manifest's table for the exact tag.
StringTable ui_strings_for(const ingest::CourseManifest &course, std::string_view languageTag);

/// Per-page runtime input. `hrefBase` is the path from the page to OEBPS/.
std::string emit_exercise_data_document(const std::string &pageStem, const ingest::CourseManifest &course,
                                        const std::vector<const model::ExerciseDefinition *> &defs,
                                        const std::vector<ingest::Anchor> &anchors,
                                        const ingest::AssetCatalog &assets);

} // namespace exbook::emit

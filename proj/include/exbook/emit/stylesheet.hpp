#pragma once

#include <exbook/ingest/manifest.hpp>

#include <string>

namespace exbook::emit {

inline constexpr std::string_view kStylesheetPath = "OEBPS/styles/book.css";

std::string emit_stylesheet(const ingest::CourseManifest &course);

} // namespace exbook::emit

#pragma once

#include <exbook/report.hpp>

#include <string_view>

namespace exbook::package {

/// Self-check of a finished container. Throws Error(NotAZip) when the bytes
/// are not a readable ZIP archive; every other problem is a report finding.
Report validate_container(std::string_view epub);

} // namespace exbook::package

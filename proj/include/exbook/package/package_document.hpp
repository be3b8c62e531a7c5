#pragma once

#include <exbook/ingest/manifest.hpp>
#include <exbook/package/plan.hpp>

#include <string>

namespace exbook::package {

/// urn:uuid identifier derived from the SHA-256 of every planned entry
/// except the package document.
std::string content_identifier(const ContainerPlan &plan);

std::string build_package_document(const ingest::CourseManifest &course, const ContainerPlan &plan);

std::string build_navigation_document(const ingest::CourseManifest &course);

/// ISO 8601 UTC with second precision: 2014-03-01T00:00:00Z.
std::string format_timestamp(std::int64_t unixSeconds);

} // namespace exbook::package

#pragma once

#include <exbook/ingest/assets.hpp>
#include <exbook/ingest/manifest.hpp>
#include <exbook/model/types.hpp>
#include <exbook/report.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <vector>

namespace exbook::app {

inline constexpr std::string_view kMediaDir = "media";
inline constexpr std::string_view kExercisesDir = "exercises";
inline constexpr std::string_view kRuntimeDir = "runtime";

struct Project {
  std::filesystem::path dir;
  ingest::CourseManifest manifest;
  model::DefinitionMap definitions;
  std::vector<std::string> order; // ids in the order they were read
  std::map<std::string, std::string> sources; // page source path -> fragment
  std::vector<ingest::ListingEntry> media;
  Report warnings;
};

std::string read_file(const std::filesystem::path &path);
void write_file(const std::filesystem::path &path, std::string_view bytes);

/// Reads the manifest, every exercise document, every page fragment and the
/// media listing. Error(Io) for unreadable files (including a missing
/// manifest); parse errors are re-thrown with the file name in front.
Project load_project(const std::filesystem::path &dir);

/// Anchor and asset checks on a loaded project. Never throws for findings.
Report check_project(const Project &project, ingest::AssetCatalog *catalogOut = nullptr);

} // namespace exbook::app

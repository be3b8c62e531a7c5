#pragma once

#include <exbook/ingest/manifest.hpp>
#include <exbook/model/types.hpp>
#include <exbook/report.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace exbook::ingest {

enum class MediaFormat { Jpg, Png, Svg, Ogg, Mp3, Mp4, Webm };

std::string_view format_name(MediaFormat f);
std::string_view format_media_type(MediaFormat f);
std::optional<MediaFormat> format_from_extension(std::string_view ext);
model::MediaKind format_kind(MediaFormat f);

/// Formats a kind must have on disk; `anyOf` means one of them is enough.
struct FormatRule {
  std::vector<MediaFormat> formats;
  bool anyOf = false;
};
FormatRule required_formats(model::MediaKind kind);

struct ListingEntry {
  std::string path; // relative to the asset root, forward slashes
  std::uint64_t byteLength = 0;
};

struct AssetFile {
  MediaFormat format;
  std::string path;
  std::uint64_t byteLength = 0;
  bool operator==(const AssetFile &) const = default;
};

struct AssetEntry {
  model::MediaKind kind;
  std::vector<AssetFile> files; // ordered by format
  std::optional<model::LicenseInfo> license;
  bool operator==(const AssetEntry &) const = default;
};

struct AssetCatalog {
  std::map<std::string, AssetEntry> entries;
  std::uint64_t totalBytes = 0;
  Report warnings;
};

struct AssetOptions {
  std::uint64_t sizeWarningBytes = 50ull * 1024 * 1024;
};

/// Resolves every media reference by basename. Problems are gathered first;
/// the thrown Error carries all of them (MissingAsset wins over MissingFormat
/// wins over AssetCollision for the error code).
AssetCatalog resolve_assets(const model::DefinitionMap &defs, const std::vector<ListingEntry> &listing,
                            const AssetOptions &options = {});

/// Recursive listing of regular files, sorted by path.
std::vector<ListingEntry> list_directory(const std::filesystem::path &root);

/// Container path of one asset file.
std::string media_href(const std::string &basename, MediaFormat f);

} // namespace exbook::ingest

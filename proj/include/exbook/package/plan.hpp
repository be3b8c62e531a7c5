#pragma once

#include <exbook/emit/page.hpp>
#include <exbook/ingest/assets.hpp>
#include <exbook/ingest/manifest.hpp>
#include <exbook/package/smil.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace exbook::package {

inline constexpr std::string_view kMimetype = "application/epub+zip";
inline constexpr std::string_view kPackageDocPath = "OEBPS/package.opf";
inline constexpr std::string_view kNavPath = "OEBPS/nav.xhtml";
inline constexpr std::string_view kRuntimeScriptPath = "OEBPS/runtime/exbook-runtime.js";
inline constexpr std::string_view kRuntimeStylePath = "OEBPS/runtime/exbook-runtime.css";

enum class Compression { Stored, Deflated };

struct ContainerEntry {
  std::string path;
  std::string bytes;
  Compression compression = Compression::Deflated;

  // Package manifest data; unused for mimetype, META-INF/ and the package
  // document itself.
  std::string itemId;
  std::string mediaType;
  std::set<std::string> properties;
  std::optional<std::string> mediaOverlay; // item id of the SMIL document
  std::optional<std::size_t> spinePosition;
  std::optional<ingest::PageLayout> layout;
  std::optional<double> overlayDuration; // seconds, SMIL items only
};

struct ContainerPlan {
  std::vector<ContainerEntry> entries;
  std::string packageDocPath = std::string(kPackageDocPath);
  std::int64_t timestamp = 0;

  const ContainerEntry *find(std::string_view path) const;
};

struct RuntimeBundle {
  std::string script;
  std::string stylesheet;
};

struct PlanInputs {
  std::vector<emit::EmittedPage> pages; // reading order
  std::map<std::string, std::string> dataDocuments; // container path -> bytes
  std::vector<SmilOverlay> overlays;
  std::string stylesheet;
  RuntimeBundle runtime;
  const ingest::AssetCatalog *assets = nullptr;
  std::map<std::string, std::string> mediaBytes; // asset-root path -> bytes
  std::int64_t timestamp = 0;
};

/// Assembles every container entry, then generates the navigation and
/// package documents. Order: mimetype, META-INF/container.xml, package
/// document, everything else by path. Throws Error(PathCollision).
ContainerPlan plan_container(const ingest::CourseManifest &course, const PlanInputs &inputs);

/// Path from a directory ("OEBPS/text/") to a container path, percent-encoded.
std::string relative_href(std::string_view fromDir, std::string_view path);

std::string container_xml(std::string_view packageDocPath);

} // namespace exbook::package

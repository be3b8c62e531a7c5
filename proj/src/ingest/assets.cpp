#include <exbook/error.hpp>
#include <exbook/ingest/assets.hpp>
#include <exbook/model/validate.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <set>

namespace exbook::ingest {

using model::MediaKind;

std::string_view format_name(MediaFormat f) {
  switch(f) {
  case MediaFormat::Jpg: return "jpg";
  case MediaFormat::Png: return "png";
  case MediaFormat::Svg: return "svg";
  case MediaFormat::Ogg: return "ogg";
  case MediaFormat::Mp3: return "mp3";
  case MediaFormat::Mp4: return "mp4";
  case MediaFormat::Webm: return "webm";
  }
  return "";
}

std::string_view format_media_type(MediaFormat f) {
  switch(f) {
  case MediaFormat::Jpg: return "image/jpeg";
  case MediaFormat::Png: return "image/png";
  case MediaFormat::Svg: return "image/svg+xml";
  case MediaFormat::Ogg: return "audio/ogg";
  case MediaFormat::Mp3: return "audio/mpeg";
  case MediaFormat::Mp4: return "video/mp4";
  case MediaFormat::Webm: return "video/webm";
  }
  return "application/octet-stream";
}

std::optional<MediaFormat> format_from_extension(std::string_view ext) {
  std::string lower(ext);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if(lower == "jpg" || lower == "jpeg") return MediaFormat::Jpg;
  if(lower == "png") return MediaFormat::Png;
  if(lower == "svg") return MediaFormat::Svg;
  if(lower == "ogg") return MediaFormat::Ogg;
  if(lower == "mp3") return MediaFormat::Mp3;
  if(lower == "mp4") return MediaFormat::Mp4;
  if(lower == "webm") return MediaFormat::Webm;
  return std::nullopt;
}

MediaKind format_kind(MediaFormat f) {
  switch(f) {
  case MediaFormat::Jpg:
  case MediaFormat::Png:
  case MediaFormat::Svg: return MediaKind::Image;
  case MediaFormat::Ogg:
  case MediaFormat::Mp3: return MediaKind::Audio;
  case MediaFormat::Mp4:
  case MediaFormat::Webm: return MediaKind::Video;
  }
  return MediaKind::Image;
}

FormatRule required_formats(MediaKind kind) {
  switch(kind) {
  case MediaKind::Image: return {{MediaFormat::Jpg, MediaFormat::Png, MediaFormat::Svg}, true};
  case MediaKind::Audio: return {{MediaFormat::Ogg, MediaFormat::Mp3}, false};
  case MediaKind::Video: return {{MediaFormat::Mp4, MediaFormat::Webm}, false};
  }
  return {};
}

std::string media_href(const std::string &basename, MediaFormat f) {
  return fmt::format("OEBPS/media/{}.{}", basename, format_name(f));
}

namespace {

struct Candidate {
  std::string basename;
  MediaFormat format;
  const ListingEntry *entry;
};

std::optional<Candidate> classify(const ListingEntry &e) {
  const auto slash = e.path.rfind('/');
  const auto name = std::string_view(e.path).substr(slash == std::string::npos ? 0 : slash + 1);
  const auto dot = name.rfind('.');
  if(dot == std::string_view::npos || dot == 0) {
    return std::nullopt;
  }
  const auto format = format_from_extension(name.substr(dot + 1));
  if(!format) {
    return std::nullopt;
  }
  return Candidate{std::string(name.substr(0, dot)), *format, &e};
}

struct Reference {
  MediaKind kind;
  std::optional<model::LicenseInfo> license;
  std::string firstUse;
};

} // namespace

AssetCatalog resolve_assets(const model::DefinitionMap &defs, const std::vector<ListingEntry> &listing,
                            const AssetOptions &options) {
  Report problems;
  AssetCatalog catalog;

  // Sorting makes everything below independent of listing order.
  std::vector<const ListingEntry *> sorted;
  for(const auto &e : listing) {
    sorted.push_back(&e);
  }
  std::sort(sorted.begin(), sorted.end(), [](auto *a, auto *b) { return a->path < b->path; });

  std::map<std::string, std::map<MediaFormat, const ListingEntry *>> onDisk;
  std::vector<const ListingEntry *> ignored;
  for(const auto *e : sorted) {
    const auto c = classify(*e);
    if(!c) {
      ignored.push_back(e);
      continue;
    }
    auto &slot = onDisk[c->basename][c->format];
    if(slot) {
      problems.error("AssetCollision", e->path,
                     fmt::format("'{}' and '{}' both provide {} for '{}'", slot->path, e->path,
                                 format_name(c->format), c->basename));
      continue;
    }
    slot = e;
  }

  std::map<std::string, Reference> refs;
  for(const auto &[id, def] : defs) {
    for(const auto &m : model::media_refs(def)) {
      auto [it, fresh] = refs.try_emplace(m.basename, Reference{m.kind, m.license, id});
      if(fresh) {
        continue;
      }
      if(it->second.kind != m.kind) {
        problems.error("KindConflict", id,
                       fmt::format("'{}' is used as {} here and as {} in '{}'", m.basename, model::media_kind_name(m.kind),
                                   model::media_kind_name(it->second.kind), it->second.firstUse));
      } else if(m.license && it->second.license && !(*m.license == *it->second.license)) {
        problems.error("LicenseConflict", id,
                       fmt::format("'{}' carries a different license than in '{}'", m.basename, it->second.firstUse));
      } else if(m.license && !it->second.license) {
        it->second.license = m.license;
      }
    }
  }

  std::set<const ListingEntry *> used;
  for(const auto &[basename, ref] : refs) {
    const auto found = onDisk.find(basename);
    if(found == onDisk.end()) {
      problems.error("MissingAsset", ref.firstUse,
                     fmt::format("no file found for {} '{}'", model::media_kind_name(ref.kind), basename));
      continue;
    }
    const auto rule = required_formats(ref.kind);
    AssetEntry entry{ref.kind, {}, ref.license};
    for(const auto f : rule.formats) {
      if(const auto it = found->second.find(f); it != found->second.end()) {
        entry.files.push_back({f, it->second->path, it->second->byteLength});
        used.insert(it->second);
      } else if(!rule.anyOf) {
        problems.error("MissingFormat", ref.firstUse,
                       fmt::format("{} '{}' is missing its {} file", model::media_kind_name(ref.kind), basename,
                                   format_name(f)));
      }
    }
    if(rule.anyOf && entry.files.empty()) {
      problems.error("MissingFormat", ref.firstUse,
                     fmt::format("{} '{}' needs one of jpg, png or svg", model::media_kind_name(ref.kind), basename));
    }
    for(const auto &file : entry.files) {
      catalog.totalBytes += file.byteLength;
    }
    catalog.entries.emplace(basename, std::move(entry));
  }

  for(const auto *e : sorted) {
    if(!used.contains(e)) {
      catalog.warnings.warning("UnreferencedAsset", e->path, "file is not used by any exercise");
    }
  }
  if(catalog.totalBytes > options.sizeWarningBytes) {
    catalog.warnings.warning("LargeContainer", "",
                             fmt::format("media alone take {} bytes, above the {} byte warning threshold",
                                         catalog.totalBytes, options.sizeWarningBytes));
  }

  if(problems.has_errors()) {
    auto code = ErrorCode::AssetCollision;
    if(problems.contains("MissingAsset")) {
      code = ErrorCode::MissingAsset;
    } else if(problems.contains("MissingFormat")) {
      code = ErrorCode::MissingFormat;
    }
    throw Error(code, fmt::format("{} media problem(s): {}", problems.error_count(), problems.findings().front().message),
                problems);
  }
  return catalog;
}

std::vector<ListingEntry> list_directory(const std::filesystem::path &root) {
  std::vector<ListingEntry> out;
  if(!std::filesystem::is_directory(root)) {
    return out;
  }
  for(const auto &e : std::filesystem::recursive_directory_iterator(root)) {
    if(e.is_regular_file()) {
      out.push_back({std::filesystem::relative(e.path(), root).generic_string(), e.file_size()});
    }
  }
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.path < b.path; });
  return out;
}

} // namespace exbook::ingest

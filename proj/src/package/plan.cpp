#include <exbook/emit/stylesheet.hpp>
#include <exbook/emit/xml.hpp>
#include <exbook/error.hpp>
#include <exbook/package/package_document.hpp>
#include <exbook/package/plan.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cctype>

namespace exbook::package {

const ContainerEntry *ContainerPlan::find(std::string_view path) const {
  for(const auto &e : entries) {
    if(e.path == path) {
      return &e;
    }
  }
  return nullptr;
}

std::string relative_href(std::string_view fromDir, std::string_view path) {
  // both are container paths; fromDir is empty or ends with '/'
  std::size_t common = 0;
  for(std::size_t i = 0; i < fromDir.size() && i < path.size() && fromDir[i] == path[i]; ++i) {
    if(fromDir[i] == '/') {
      common = i + 1;
    }
  }
  std::string out;
  const auto rest = fromDir.substr(common);
  out.reserve(path.size());
  for(const char c : rest) {
    if(c == '/') {
      out += "../";
    }
  }
  out += path.substr(common);
  return emit::encode_href(out);
}

std::string container_xml(std::string_view packageDocPath) {
  emit::XmlWriter w;
  w.open("container", {{"version", "1.0"}, {"xmlns", "urn:oasis:names:tc:opendocument:xmlns:container"}});
  w.open("rootfiles");
  w.empty("rootfile", {{"full-path", std::string(packageDocPath)}, {"media-type", "application/oebps-package+xml"}});
  w.close();
  w.close();
  return w.str();
}

namespace {

std::string make_item_id(std::string_view path, std::set<std::string> &taken) {
  auto rel = path.substr(path.find('/') + 1); // drop OEBPS/
  std::string id;
  for(const char c : rel) {
    id += std::isalnum(static_cast<unsigned char>(c)) ? c : '-';
  }
  if(id.empty() || !std::isalpha(static_cast<unsigned char>(id.front()))) {
    id = "i-" + id;
  }
  auto unique = id;
  for(int n = 2; !taken.insert(unique).second; ++n) {
    unique = fmt::format("{}-{}", id, n);
  }
  return unique;
}

} // namespace

ContainerPlan plan_container(const ingest::CourseManifest &course, const PlanInputs &in) {
  ContainerPlan plan;
  plan.timestamp = in.timestamp;
  std::vector<ContainerEntry> rest;
  std::set<std::string> paths{"mimetype", "META-INF/container.xml", std::string(kPackageDocPath)};

  auto add = [&](ContainerEntry e) -> ContainerEntry & {
    if(!paths.insert(e.path).second) {
      throw Error(ErrorCode::PathCollision, fmt::format("two container entries map to '{}'", e.path));
    }
    rest.push_back(std::move(e));
    return rest.back();
  };

  add({.path = std::string(kNavPath),
       .bytes = build_navigation_document(course),
       .mediaType = "application/xhtml+xml",
       .properties = {"nav"}});
  add({.path = std::string(emit::kStylesheetPath), .bytes = in.stylesheet, .mediaType = "text/css"});

  bool anyScripted = false;
  std::map<std::string, std::size_t> overlayFor; // page path -> overlay index
  for(std::size_t i = 0; i < in.overlays.size(); ++i) {
    overlayFor.emplace(in.overlays[i].textPath, i);
  }
  for(std::size_t i = 0; i < in.pages.size(); ++i) {
    const auto &p = in.pages[i];
    ContainerEntry e{.path = p.path, .bytes = p.bytes, .mediaType = "application/xhtml+xml"};
    if(p.scripted) {
      e.properties.insert("scripted");
      anyScripted = true;
    }
    e.spinePosition = i;
    e.layout = p.layout;
    add(std::move(e));
  }
  for(const auto &[path, bytes] : in.dataDocuments) {
    add({.path = path, .bytes = bytes, .mediaType = "application/json"});
  }
  for(const auto &o : in.overlays) {
    ContainerEntry e{.path = o.path, .bytes = o.bytes, .mediaType = "application/smil+xml"};
    e.overlayDuration = o.totalDuration;
    add(std::move(e));
  }
  if(anyScripted) {
    add({.path = std::string(kRuntimeScriptPath), .bytes = in.runtime.script, .mediaType = "application/javascript"});
    add({.path = std::string(kRuntimeStylePath), .bytes = in.runtime.stylesheet, .mediaType = "text/css"});
  }
  if(in.assets) {
    for(const auto &[basename, entry] : in.assets->entries) {
      for(const auto &f : entry.files) {
        const auto bytes = in.mediaBytes.find(f.path);
        if(bytes == in.mediaBytes.end()) {
          throw Error(ErrorCode::Io, fmt::format("media file '{}' was not loaded", f.path));
        }
        add({.path = ingest::media_href(basename, f.format),
             .bytes = bytes->second,
             .mediaType = std::string(ingest::format_media_type(f.format))});
      }
    }
  }

  std::sort(rest.begin(), rest.end(), [](const auto &a, const auto &b) { return a.path < b.path; });
  std::set<std::string> ids;
  for(auto &e : rest) {
    e.itemId = e.path == kNavPath ? "nav" : make_item_id(e.path, ids);
    ids.insert(e.itemId);
  }
  std::map<std::string, std::string> idOf;
  for(const auto &e : rest) {
    idOf.emplace(e.path, e.itemId);
  }
  for(auto &e : rest) {
    if(const auto it = overlayFor.find(e.path); it != overlayFor.end()) {
      e.mediaOverlay = idOf.at(in.overlays[it->second].path);
    }
  }

  plan.entries.push_back({.path = "mimetype", .bytes = std::string(kMimetype), .compression = Compression::Stored});
  plan.entries.push_back({.path = "META-INF/container.xml", .bytes = container_xml(kPackageDocPath)});
  plan.entries.push_back({.path = std::string(kPackageDocPath)});
  for(auto &e : rest) {
    plan.entries.push_back(std::move(e));
  }
  plan.entries[2].bytes = build_package_document(course, plan);
  return plan;
}

} // namespace exbook::package

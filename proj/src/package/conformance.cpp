#include <exbook/emit/xml.hpp>
#include <exbook/emit/xml_tree.hpp>
#include <exbook/error.hpp>
#include <exbook/package/conformance.hpp>
#include <exbook/package/plan.hpp>
#include <exbook/package/zip.hpp>

#include <fmt/format.h>

#include <map>
#include <optional>
#include <set>

namespace exbook::package {

using emit::XmlNode;

namespace {

bool is_external(std::string_view href) {
  return href.find("://") != std::string_view::npos || href.rfind("mailto:", 0) == 0 || href.rfind("data:", 0) == 0;
}

/// Resolves `href` against the directory of `base`; nullopt when it climbs
/// out of the container.
std::optional<std::string> resolve(std::string_view base, std::string_view href) {
  if(href.empty()) {
    return std::nullopt;
  }
  std::vector<std::string> parts;
  const auto dir = base.substr(0, base.rfind('/') == std::string_view::npos ? 0 : base.rfind('/'));
  auto push = [&](std::string_view path) -> bool {
    std::size_t start = 0;
    while(start <= path.size()) {
      const auto cut = path.find('/', start);
      const auto part = path.substr(start, cut == std::string_view::npos ? std::string_view::npos : cut - start);
      if(part == "..") {
        if(parts.empty()) {
          return false;
        }
        parts.pop_back();
      } else if(!part.empty() && part != ".") {
        parts.emplace_back(part);
      }
      if(cut == std::string_view::npos) {
        break;
      }
      start = cut + 1;
    }
    return true;
  };
  if(!dir.empty() && href.front() != '/') {
    push(dir);
  }
  if(!push(emit::decode_href(href))) {
    return std::nullopt;
  }
  std::string out;
  for(const auto &p : parts) {
    out += (out.empty() ? "" : "/") + p;
  }
  return out;
}

std::pair<std::string, std::string> split_fragment(std::string_view href) {
  const auto hash = href.find('#');
  if(hash == std::string_view::npos) {
    return {std::string(href), {}};
  }
  return {std::string(href.substr(0, hash)), std::string(href.substr(hash + 1))};
}

struct Document {
  std::optional<XmlNode> root;
  std::set<std::string> ids;
};

class Checker {
public:
  explicit Checker(std::vector<ZipEntry> entries) : entries_(std::move(entries)) {
    for(const auto &e : entries_) {
      if(!files_.emplace(e.path, &e).second) {
        report_.error("DuplicateEntry", e.path, "the archive lists this path more than once");
      }
    }
  }

  Report run() {
    check_mimetype();
    const auto opfPath = find_package_document();
    if(opfPath) {
      check_package(*opfPath);
    }
    return std::move(report_);
  }

private:
  void check_mimetype() {
    if(entries_.empty()) {
      report_.error("EmptyArchive", "", "the archive has no entries");
      return;
    }
    const auto &first = entries_.front();
    if(first.path != "mimetype") {
      report_.error("MimetypeNotFirst", first.path, "the first entry must be 'mimetype'");
      return;
    }
    if(first.method != 0) {
      report_.error("MimetypeCompressed", "mimetype", "mimetype must be stored without compression");
    }
    if(first.data != kMimetype) {
      report_.error("MimetypeContent", "mimetype", fmt::format("mimetype must contain exactly '{}'", kMimetype));
    }
    if(first.localExtraLength != 0) {
      report_.error("MimetypeExtraField", "mimetype", "the mimetype local header must not carry an extra field");
    }
  }

  const XmlNode *parse(const std::string &path) {
    auto &doc = docs_[path];
    if(doc.root) {
      return &*doc.root;
    }
    const auto it = files_.find(path);
    if(it == files_.end()) {
      return nullptr;
    }
    try {
      doc.root = emit::parse_xml(it->second->data);
    } catch(const Error &e) {
      report_.error("MalformedXml", path, e.what());
      return nullptr;
    }
    doc.root->walk([&](const XmlNode &n) {
      if(const auto *id = n.attr("id")) {
        doc.ids.insert(*id);
      }
    });
    return &*doc.root;
  }

  std::optional<std::string> find_package_document() {
    const std::string path = "META-INF/container.xml";
    if(!files_.contains(path)) {
      report_.error("MissingContainerXml", path, "META-INF/container.xml is missing");
      return std::nullopt;
    }
    const auto *root = parse(path);
    if(!root) {
      return std::nullopt;
    }
    const auto *rootfiles = root->child("rootfiles");
    const auto *rootfile = rootfiles ? rootfiles->child("rootfile") : nullptr;
    const auto *full = rootfile ? rootfile->attr("full-path") : nullptr;
    if(!full) {
      report_.error("MissingRootfile", path, "container.xml names no rootfile");
      return std::nullopt;
    }
    if(!files_.contains(*full)) {
      report_.error("MissingPackageDocument", path, fmt::format("rootfile '{}' is not in the archive", *full));
      return std::nullopt;
    }
    return *full;
  }

  struct Item {
    std::string id;
    std::string path;
    std::string mediaType;
    std::set<std::string> properties;
    const std::string *overlay = nullptr;
  };

  void check_package(const std::string &opf) {
    const auto *root = parse(opf);
    if(!root) {
      return;
    }
    if(root->name != "package") {
      report_.error("BadPackageDocument", opf, fmt::format("root element is <{}>, not <package>", root->name));
      return;
    }
    check_metadata(opf, *root);

    std::map<std::string, Item> items;
    std::set<std::string> listed{"mimetype", opf};
    std::size_t navCount = 0;
    const auto *manifest = root->child("manifest");
    if(!manifest) {
      report_.error("MissingManifest", opf, "package document has no manifest");
      return;
    }
    for(const auto *node : manifest->children_named("item")) {
      const auto *id = node->attr("id");
      const auto *href = node->attr("href");
      const auto *type = node->attr("media-type");
      if(!id || !href || !type) {
        report_.error("BadManifestItem", opf, fmt::format("line {}: item needs id, href and media-type", node->line));
        continue;
      }
      Item item{*id, {}, *type, {}, node->attr("media-overlay")};
      if(const auto *props = node->attr("properties")) {
        std::size_t start = 0;
        while(start < props->size()) {
          auto cut = props->find(' ', start);
          if(cut == std::string::npos) {
            cut = props->size();
          }
          if(cut > start) {
            item.properties.insert(props->substr(start, cut - start));
          }
          start = cut + 1;
        }
      }
      if(item.properties.contains("nav")) {
        ++navCount;
      }
      const auto target = resolve(opf, split_fragment(*href).first);
      if(!target || !files_.contains(*target)) {
        report_.error("MissingResource", opf, fmt::format("manifest item '{}' points at missing '{}'", *id, *href));
      } else {
        item.path = *target;
        listed.insert(*target);
      }
      if(!items.emplace(*id, item).second) {
        report_.error("DuplicateItemId", opf, fmt::format("manifest id '{}' is used twice", *id));
      }
    }
    if(navCount != 1) {
      report_.error("NavCount", opf, fmt::format("exactly one item must carry the nav property, found {}", navCount));
    }

    const auto *spine = root->child("spine");
    if(!spine) {
      report_.error("MissingSpine", opf, "package document has no spine");
    } else {
      const auto refs = spine->children_named("itemref");
      if(refs.empty()) {
        report_.error("EmptySpine", opf, "the spine lists no content documents");
      }
      for(const auto *ref : refs) {
        const auto *idref = ref->attr("idref");
        if(!idref || !items.contains(*idref)) {
          report_.error("SpineItemMissing", opf,
                        fmt::format("spine itemref '{}' matches no manifest item", idref ? *idref : std::string()));
        }
      }
    }

    for(const auto &[id, item] : items) {
      if(item.overlay) {
        const auto it = items.find(*item.overlay);
        if(it == items.end() || it->second.mediaType != "application/smil+xml") {
          report_.error("BadMediaOverlay", opf,
                        fmt::format("item '{}' names media overlay '{}', which is not a SMIL item", id, *item.overlay));
        }
      }
      if(item.path.empty()) {
        continue;
      }
      if(item.mediaType == "application/xhtml+xml") {
        check_content_document(item);
      } else if(item.mediaType == "application/smil+xml") {
        check_smil(item);
      }
    }

    for(const auto &e : entries_) {
      if(!listed.contains(e.path) && e.path.rfind("META-INF/", 0) != 0) {
        report_.warning("UnlistedFile", e.path, "file is in the archive but not in the package manifest");
      }
    }
  }

  void check_metadata(const std::string &opf, const XmlNode &root) {
    const auto *meta = root.child("metadata");
    if(!meta) {
      report_.error("MissingMetadata", opf, "package document has no metadata");
      return;
    }
    for(const auto *name : {"dc:identifier", "dc:title", "dc:language"}) {
      const auto *n = meta->child(name);
      if(!n || n->inner_text().empty()) {
        report_.error("MissingMetadata", opf, fmt::format("<{}> is missing or empty", name));
      }
    }
    const auto *uid = root.attr("unique-identifier");
    bool uidFound = false;
    bool modified = false;
    for(const auto *n : meta->children_named("dc:identifier")) {
      if(uid && n->attr("id") && *n->attr("id") == *uid) {
        uidFound = true;
      }
    }
    for(const auto *n : meta->children_named("meta")) {
      if(const auto *p = n->attr("property"); p && *p == "dcterms:modified") {
        modified = true;
      }
    }
    if(!uidFound) {
      report_.error("MissingMetadata", opf, "unique-identifier does not name a dc:identifier");
    }
    if(!modified) {
      report_.error("MissingMetadata", opf, "dcterms:modified is missing");
    }
  }

  void check_reference(const Item &from, const XmlNode &node, std::string_view attr, const std::string &value) {
    if(value.empty() || is_external(value)) {
      return;
    }
    const auto [file, fragment] = split_fragment(value);
    std::string target = from.path;
    if(!file.empty()) {
      const auto resolved = resolve(from.path, file);
      if(!resolved || !files_.contains(*resolved)) {
        report_.error("BrokenReference", from.path,
                      fmt::format("line {}: {}=\"{}\" does not resolve inside the container", node.line, attr, value));
        return;
      }
      target = *resolved;
    }
    if(!fragment.empty() && target.ends_with(".xhtml")) {
      if(parse(target) && !docs_[target].ids.contains(fragment)) {
        report_.error("BrokenReference", from.path,
                      fmt::format("line {}: fragment '#{}' does not exist in {}", node.line, fragment, target));
      }
    }
  }

  void check_content_document(const Item &item) {
    const auto *root = parse(item.path);
    if(!root) {
      return;
    }
    bool hasScript = false;
    root->walk([&](const XmlNode &n) {
      if(n.name == "script") {
        hasScript = true;
      }
      for(const auto &attr : {"href", "src", "data-exbook-data"}) {
        if(const auto *v = n.attr(attr)) {
          check_reference(item, n, attr, *v);
        }
      }
    });
    if(hasScript && !item.properties.contains("scripted")) {
      report_.error("ScriptedPropertyMissing", item.path, "page contains scripts but lacks the scripted property");
    }
    if(!hasScript && item.properties.contains("scripted")) {
      report_.warning("ScriptedPropertyUnused", item.path, "page carries the scripted property but has no script");
    }
  }

  void check_smil(const Item &item) {
    const auto *root = parse(item.path);
    if(!root) {
      return;
    }
    root->walk([&](const XmlNode &n) {
      if(n.name == "text" || n.name == "audio") {
        const auto *src = n.attr("src");
        if(!src) {
          report_.error("BrokenReference", item.path, fmt::format("line {}: <{}> has no src", n.line, n.name));
          return;
        }
        if(n.name == "text" && split_fragment(*src).second.empty()) {
          report_.error("MissingFragment", item.path, fmt::format("line {}: text src '{}' names no fragment", n.line, *src));
        }
        check_reference(item, n, "src", *src);
      }
    });
  }

  std::vector<ZipEntry> entries_;
  std::map<std::string, const ZipEntry *> files_;
  std::map<std::string, Document> docs_;
  Report report_;
};

} // namespace

Report validate_container(std::string_view epub) { return Checker(read_zip(epub)).run(); }

} // namespace exbook::package

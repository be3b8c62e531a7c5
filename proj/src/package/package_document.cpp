#include <exbook/emit/xml.hpp>
#include <exbook/package/package_document.hpp>
#include <exbook/package/smil.hpp>

#include <fmt/format.h>
#include <openssl/evp.h>

#include <array>
#include <chrono>
#include <map>
#include <memory>

namespace exbook::package {

using ingest::Layout;
using ingest::PageLayout;

std::string format_timestamp(std::int64_t unixSeconds) {
  using namespace std::chrono;
  const sys_seconds tp{seconds{unixSeconds}};
  const auto day = floor<days>(tp);
  const year_month_day ymd{day};
  const hh_mm_ss hms{tp - day};
  return fmt::format("{:04}-{:02}-{:02}T{:02}:{:02}:{:02}Z", static_cast<int>(ymd.year()),
                     static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()), hms.hours().count(),
                     hms.minutes().count(), hms.seconds().count());
}

std::string content_identifier(const ContainerPlan &plan) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), &EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  const char zero = 0;
  for(const auto &e : plan.entries) {
    if(e.path == plan.packageDocPath) {
      continue;
    }
    EVP_DigestUpdate(ctx.get(), e.path.data(), e.path.size());
    EVP_DigestUpdate(ctx.get(), &zero, 1);
    const auto len = fmt::format("{}", e.bytes.size());
    EVP_DigestUpdate(ctx.get(), len.data(), len.size());
    EVP_DigestUpdate(ctx.get(), &zero, 1);
    EVP_DigestUpdate(ctx.get(), e.bytes.data(), e.bytes.size());
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int size = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &size);
  // RFC 9562 version 8 (custom) layout over the first 16 bytes
  digest[6] = static_cast<unsigned char>((digest[6] & 0x0F) | 0x80);
  digest[8] = static_cast<unsigned char>((digest[8] & 0x3F) | 0x80);
  std::string hex;
  for(std::size_t i = 0; i < 16; ++i) {
    if(i == 4 || i == 6 || i == 8 || i == 10) {
      hex += '-';
    }
    hex += fmt::format("{:02x}", digest[i]);
  }
  return "urn:uuid:" + hex;
}

std::string build_navigation_document(const ingest::CourseManifest &course) {
  emit::XmlWriter w;
  w.raw("<!DOCTYPE html>");
  w.open("html", {{"xmlns", "http://www.w3.org/1999/xhtml"},
                  {"xmlns:epub", "http://www.idpf.org/2007/ops"},
                  {"xml:lang", course.language},
                  {"lang", course.language}});
  w.open("head");
  w.empty("meta", {{"charset", "utf-8"}});
  w.leaf("title", {}, course.title);
  w.close();
  w.open("body");
  w.open("nav", {{"epub:type", "toc"}, {"id", "toc"}});
  w.leaf("h1", {}, course.title);
  w.open("ol");
  for(const auto &ref : ingest::all_pages(course)) {
    if(ref.page != 0) {
      continue;
    }
    const auto &chapter = course.chapters[ref.chapter];
    const auto href = fmt::format("text/{}.xhtml", ingest::page_stem(ref));
    if(chapter.pages.size() == 1) {
      w.open("li");
      w.leaf("a", {{"href", href}}, chapter.title);
      w.close();
      continue;
    }
    w.open("li");
    w.leaf("a", {{"href", href}}, chapter.title);
    w.open("ol");
    for(std::size_t p = 0; p < chapter.pages.size(); ++p) {
      const ingest::PageRef page{ref.chapter, p, &chapter.pages[p]};
      w.open("li");
      w.leaf("a", {{"href", fmt::format("text/{}.xhtml", ingest::page_stem(page))}},
             fmt::format("{} ({})", chapter.title, p + 1));
      w.close();
    }
    w.close();
    w.close();
  }
  w.close();
  w.close();
  w.close();
  w.close();
  return w.str();
}

std::string build_package_document(const ingest::CourseManifest &course, const ContainerPlan &plan) {
  const auto dir = plan.packageDocPath.substr(0, plan.packageDocPath.rfind('/') + 1);
  std::vector<const ContainerEntry *> items;
  std::vector<const ContainerEntry *> spine;
  double totalOverlay = 0;
  bool anyOverlay = false;
  for(const auto &e : plan.entries) {
    if(e.itemId.empty()) {
      continue; // mimetype, META-INF, the package document
    }
    items.push_back(&e);
    if(e.spinePosition) {
      spine.push_back(&e);
    }
    if(e.overlayDuration) {
      totalOverlay += *e.overlayDuration;
      anyOverlay = true;
    }
  }
  std::sort(spine.begin(), spine.end(), [](auto *a, auto *b) { return *a->spinePosition < *b->spinePosition; });

  emit::XmlWriter w;
  w.open("package", {{"xmlns", "http://www.idpf.org/2007/opf"},
                     {"version", "3.0"},
                     {"unique-identifier", "pub-id"},
                     {"xml:lang", course.language},
                     {"prefix", "rendition: http://www.idpf.org/vocab/rendition/#"}});
  w.open("metadata", {{"xmlns:dc", "http://purl.org/dc/elements/1.1/"}});
  w.leaf("dc:identifier", {{"id", "pub-id"}}, course.identifier.value_or(content_identifier(plan)));
  w.leaf("dc:title", {}, course.title);
  w.leaf("dc:language", {}, course.language);
  w.leaf("meta", {{"property", "dcterms:modified"}}, format_timestamp(plan.timestamp));
  w.leaf("meta", {{"property", "rendition:layout"}},
         course.layout == Layout::Fixed ? "pre-paginated" : "reflowable");
  if(anyOverlay) {
    for(const auto *e : items) {
      if(e->overlayDuration) {
        w.leaf("meta", {{"property", "media:duration"}, {"refines", "#" + e->itemId}},
               format_full_clock(*e->overlayDuration));
      }
    }
    w.leaf("meta", {{"property", "media:duration"}}, format_full_clock(totalOverlay));
    w.leaf("meta", {{"property", "media:active-class"}}, "-epub-media-overlay-active");
  }
  w.close();

  w.open("manifest");
  for(const auto *e : items) {
    emit::Attributes attrs{{"id", e->itemId}, {"href", relative_href(dir, e->path)}, {"media-type", e->mediaType}};
    if(!e->properties.empty()) {
      std::string props;
      for(const auto &p : e->properties) {
        props += (props.empty() ? "" : " ") + p;
      }
      attrs.emplace_back("properties", props);
    }
    if(e->mediaOverlay) {
      attrs.emplace_back("media-overlay", *e->mediaOverlay);
    }
    w.empty("item", attrs);
  }
  w.close();

  w.open("spine");
  for(const auto *e : spine) {
    emit::Attributes attrs{{"idref", e->itemId}};
    if(course.layout == Layout::Mixed && e->layout) {
      attrs.emplace_back("properties", *e->layout == PageLayout::Fixed ? "rendition:layout-pre-paginated"
                                                                         : "rendition:layout-reflowable");
    }
    w.empty("itemref", attrs);
  }
  w.close();
  w.close();
  return w.str();
}

} // namespace exbook::package

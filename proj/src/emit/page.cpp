#include <exbook/emit/page.hpp>
#include <exbook/emit/xml.hpp>
#include <exbook/emit/xml_tree.hpp>
#include <exbook/error.hpp>

#include <fmt/format.h>

#include <map>

namespace exbook::emit {

using namespace exbook::ingest;

std::string emit_attribution_fragment(const model::LicenseInfo &license, std::string_view basename,
                                      const StringTable &ui) {
  std::string out = fmt::format("<p class=\"exbook-attribution\" data-exbook-media=\"{}\">", escape_attribute(basename));
  out += fmt::format("<span class=\"exbook-work\">{}</span>, ", escape_text(license.workTitle));
  out += fmt::format("<span class=\"exbook-author\">{}</span>, ", escape_text(license.author));
  out += fmt::format("<span class=\"exbook-license\">{}</span>", escape_text(license.licenseName));
  if(license.sourceUrl) {
    const auto label = ui.contains("source") ? ui.at("source") : std::string("Source");
    out += fmt::format(" <a class=\"exbook-source\" href=\"{}\">{}</a>", escape_attribute(*license.sourceUrl),
                       escape_text(label));
  }
  return out + "</p>";
}

namespace {

std::string anchor_markup(const Anchor &a, const model::ExerciseDefinition &def, const StringTable &ui) {
  const auto kind = model::kind_name(def.kind);
  const bool dialog = a.presentation == Presentation::Dialog;
  std::string out = fmt::format(
      "<div id=\"{}\" class=\"{} exbook-exercise{}\" data-exbook-kind=\"{}\" data-exbook-presentation=\"{}\" "
      "data-exbook-magnify=\"{}\" data-exbook-copyright=\"{}\">",
      escape_attribute(a.exerciseId), kind, dialog ? " exbook-dialog" : "", kind, presentation_name(a.presentation),
      a.magnify ? "true" : "false", a.showLicense ? "true" : "false");
  const auto fallback = fmt::format("<p class=\"exbook-fallback\">{}</p>", escape_text(ui.at("noscript")));
  if(dialog) {
    out += fmt::format("<button type=\"button\" class=\"exbook-launch\" data-exbook-target=\"{}\">{}</button>",
                       escape_attribute(a.exerciseId), escape_text(ui.at("open")));
    out += fallback;
  } else {
    out += "<div class=\"exbook-region\">" + fallback + "</div>";
  }
  out += "</div>";

  std::vector<std::string> credits;
  std::set<std::string> seen;
  for(const auto &m : model::media_refs(def)) {
    if(m.license && seen.insert(m.basename).second) {
      credits.push_back(emit_attribution_fragment(*m.license, m.basename, ui));
    }
  }
  if(!credits.empty()) {
    out += fmt::format("<div class=\"exbook-attributions\" data-exbook-for=\"{}\">", escape_attribute(a.exerciseId));
    for(const auto &c : credits) {
      out += c;
    }
    out += "</div>";
  }
  return out;
}

struct FragmentRenderer {
  const std::map<std::string, std::string> &anchors; // id -> markup
  std::set<std::string> placed;

  std::string render(const XmlNode &n) {
    if(n.isText) {
      return escape_text(n.text);
    }
    if(const auto *id = n.attr("id")) {
      if(const auto it = anchors.find(*id); it != anchors.end() && !placed.contains(*id)) {
        placed.insert(*id);
        return it->second;
      }
    }
    std::string out = "<" + n.name;
    for(const auto &[k, v] : n.attrs) {
      out += fmt::format(" {}=\"{}\"", k, escape_attribute(v));
    }
    if(n.children.empty()) {
      return out + "/>";
    }
    out += '>';
    for(const auto &c : n.children) {
      out += render(c);
    }
    return out + "</" + n.name + ">";
  }
};

} // namespace

EmittedPage emit_content_page(const PageRef &ref, const CourseManifest &course, const model::DefinitionMap &defs,
                              std::string_view source) {
  const auto &spec = *ref.spec;
  const auto stem = page_stem(ref);
  const auto ui = ui_strings_for(course, course.language);

  EmittedPage page;
  page.path = fmt::format("OEBPS/text/{}.xhtml", stem);
  page.layout = effective_layout(course, spec);
  page.scripted = !spec.anchors.empty();
  if(page.scripted) {
    page.dataPath = fmt::format("OEBPS/data/{}.json", stem);
  }

  XmlNode fragment;
  try {
    fragment = parse_xml(fmt::format("<exbook-fragment>{}</exbook-fragment>", source));
  } catch(const Error &e) {
    throw Error(ErrorCode::SyntaxError, fmt::format("{}: {}", spec.sourcePath, e.what()),
                e.location().value_or(SourceLocation{}));
  }

  std::map<std::string, std::string> markup;
  std::vector<std::string> order;
  for(const auto &a : spec.anchors) {
    markup.emplace(a.exerciseId, anchor_markup(a, defs.at(a.exerciseId), ui));
    order.push_back(a.exerciseId);
    page.anchorIds.insert(a.exerciseId);
  }
  FragmentRenderer renderer{markup, {}};
  std::string content;
  for(const auto &c : fragment.children) {
    content += renderer.render(c);
  }
  std::string trailing;
  for(const auto &id : order) {
    if(!renderer.placed.contains(id)) {
      trailing += markup.at(id);
    }
  }

  std::string overlay;
  if(spec.overlayRef) {
    const auto &task = defs.at(*spec.overlayRef);
    for(const auto &t : task.tasks) {
      for(const auto &clip : std::get<model::task::MediaOverlay>(t).clips) {
        if(clip.text) {
          overlay += fmt::format("<span id=\"{}\" class=\"exbook-clip\">{}</span> ", escape_attribute(clip.textFragmentId),
                                 escape_text(*clip.text));
        }
      }
    }
    if(!overlay.empty()) {
      overlay.pop_back();
    }
  }

  const auto &lang = course.language;
  XmlWriter w;
  w.raw("<!DOCTYPE html>");
  w.open("html", {{"xmlns", "http://www.w3.org/1999/xhtml"},
                  {"xmlns:epub", "http://www.idpf.org/2007/ops"},
                  {"xml:lang", lang},
                  {"lang", lang}});
  w.open("head");
  w.empty("meta", {{"charset", "utf-8"}});
  w.leaf("title", {}, course.chapters[ref.chapter].title);
  if(page.layout == PageLayout::Fixed) {
    w.empty("meta", {{"name", "viewport"},
                     {"content", fmt::format("width={}, height={}", course.viewport.width, course.viewport.height)}});
  }
  w.empty("link", {{"rel", "stylesheet"}, {"type", "text/css"}, {"href", "../styles/book.css"}});
  if(page.scripted) {
    w.empty("link", {{"rel", "stylesheet"}, {"type", "text/css"}, {"href", "../runtime/exbook-runtime.css"}});
    w.leaf("script", {{"type", "text/javascript"}, {"src", "../runtime/exbook-runtime.js"}}, "");
  }
  w.close();

  Attributes body{{"class", page.layout == PageLayout::Fixed ? "exbook-page exbook-fixed" : "exbook-page exbook-reflowable"}};
  if(page.dataPath) {
    body.emplace_back("data-exbook-data", fmt::format("../data/{}.json", stem));
  }
  w.open("body", body);
  w.line("<section class=\"exbook-content\">" + content + "</section>");
  if(!trailing.empty()) {
    w.line("<section class=\"exbook-exercises\">" + trailing + "</section>");
  }
  if(!overlay.empty()) {
    w.line(fmt::format("<section class=\"exbook-overlay\" data-exbook-overlay=\"{}\"><p>{}</p></section>",
                       escape_attribute(*spec.overlayRef), overlay));
  }
  w.close();
  w.close();
  page.bytes = w.str();

  // Re-read what was produced: proves well-formedness and yields the ids.
  const auto doc = parse_xml(page.bytes);
  std::string duplicate;
  doc.walk([&](const XmlNode &n) {
    if(const auto *id = n.attr("id")) {
      if(!page.fragmentIds.insert(*id).second && duplicate.empty()) {
        duplicate = *id;
      }
      page.fragmentOrder.push_back(*id);
    }
  });
  if(!duplicate.empty()) {
    throw Error(ErrorCode::ConstraintError,
                fmt::format("{}: id '{}' occurs more than once on the page", spec.sourcePath, duplicate));
  }
  return page;
}

} // namespace exbook::emit

#include <exbook/error.hpp>
#include <exbook/ingest/json_codec.hpp>
#include <exbook/ingest/manifest.hpp>
#include <exbook/model/validate.hpp>

#include <fmt/format.h>

namespace exbook::ingest {

std::string_view layout_name(Layout l) {
  switch(l) {
  case Layout::Fixed: return "fixed";
  case Layout::Reflowable: return "reflowable";
  case Layout::Mixed: return "mixed";
  }
  return "reflowable";
}

std::string_view page_layout_name(PageLayout l) { return l == PageLayout::Fixed ? "fixed" : "reflowable"; }

std::string_view presentation_name(Presentation p) { return p == Presentation::Inline ? "inline" : "dialog"; }

PageLayout effective_layout(const CourseManifest &course, const PageSpec &page) {
  switch(course.layout) {
  case Layout::Fixed: return PageLayout::Fixed;
  case Layout::Reflowable: return PageLayout::Reflowable;
  case Layout::Mixed: return page.layout.value_or(PageLayout::Fixed);
  }
  return PageLayout::Reflowable;
}

std::vector<PageRef> all_pages(const CourseManifest &course) {
  std::vector<PageRef> out;
  for(std::size_t c = 0; c < course.chapters.size(); ++c) {
    for(std::size_t p = 0; p < course.chapters[c].pages.size(); ++p) {
      out.push_back({c, p, &course.chapters[c].pages[p]});
    }
  }
  return out;
}

std::string page_stem(const PageRef &ref) { return fmt::format("chap{:02}-page{:02}", ref.chapter + 1, ref.page + 1); }

namespace {

[[noreturn]] void constraint(const std::string &path, const std::string &message) {
  throw Error(ErrorCode::ConstraintError, fmt::format("{}: {}", path, message));
}

bool safe_relative_path(std::string_view p) {
  if(p.empty() || p.front() == '/' || p.find('\\') != std::string_view::npos || p.find(':') != std::string_view::npos) {
    return false;
  }
  std::size_t start = 0;
  while(start <= p.size()) {
    const auto cut = p.find('/', start);
    const auto part = p.substr(start, cut == std::string_view::npos ? std::string_view::npos : cut - start);
    if(part.empty() || part == "." || part == "..") {
      return false;
    }
    if(cut == std::string_view::npos) {
      break;
    }
    start = cut + 1;
  }
  return true;
}

std::string id_field(Fields &f, std::string_view key) {
  auto id = f.string(key);
  if(!model::is_fragment_id(id)) {
    constraint(f.child(key), fmt::format("'{}' is not a valid exercise id", id));
  }
  return id;
}

Anchor read_anchor(const json &v, const std::string &path) {
  Fields f(v, path);
  Anchor a;
  a.exerciseId = id_field(f, "exercise");
  if(const auto p = f.optional_string("presentation")) {
    if(*p == "inline") {
      a.presentation = Presentation::Inline;
    } else if(*p == "dialog") {
      a.presentation = Presentation::Dialog;
    } else {
      schema_error(f.child("presentation"), fmt::format("expected \"inline\" or \"dialog\", found \"{}\"", *p));
    }
  }
  a.magnify = f.boolean("magnify", false);
  a.showLicense = f.boolean("showLicense", true);
  f.finish();
  return a;
}

PageSpec read_page(const json &v, const std::string &path, Layout courseLayout) {
  Fields f(v, path);
  PageSpec page;
  page.sourcePath = f.string("source");
  if(!safe_relative_path(page.sourcePath)) {
    constraint(f.child("source"), fmt::format("'{}' must be a relative path inside the project", page.sourcePath));
  }
  if(const auto l = f.optional_string("layout")) {
    if(courseLayout != Layout::Mixed) {
      constraint(f.child("layout"), "per-page layout needs a mixed course layout");
    }
    if(*l == "fixed") {
      page.layout = PageLayout::Fixed;
    } else if(*l == "reflowable") {
      page.layout = PageLayout::Reflowable;
    } else {
      schema_error(f.child("layout"), fmt::format("expected \"fixed\" or \"reflowable\", found \"{}\"", *l));
    }
  }
  if(const auto *anchors = f.optional("anchors")) {
    if(!anchors->is_array()) {
      schema_error(f.child("anchors"), "expected a list");
    }
    for(std::size_t i = 0; i < anchors->size(); ++i) {
      page.anchors.push_back(read_anchor((*anchors)[i], fmt::format("{}[{}]", f.child("anchors"), i)));
    }
  }
  if(f.has("overlay")) {
    page.overlayRef = id_field(f, "overlay");
  }
  f.finish();
  return page;
}

} // namespace

CourseManifest parse_course_manifest(std::string_view bytes) {
  const auto root = parse_json_text(bytes);
  Fields f(root, "");
  CourseManifest m;
  m.title = f.string("title");
  if(m.title.empty()) {
    constraint("title", "must not be empty");
  }
  m.language = f.string("language");
  if(!model::is_language_tag(m.language)) {
    constraint("language", fmt::format("'{}' is not a language tag", m.language));
  }
  m.identifier = f.optional_string("identifier");
  if(m.identifier && m.identifier->empty()) {
    constraint("identifier", "must not be empty when present");
  }

  const auto layout = f.string("layout");
  if(layout == "fixed") {
    m.layout = Layout::Fixed;
  } else if(layout == "reflowable") {
    m.layout = Layout::Reflowable;
  } else if(layout == "mixed") {
    m.layout = Layout::Mixed;
  } else {
    schema_error("layout", fmt::format("expected fixed, reflowable or mixed, found \"{}\"", layout));
  }

  if(const auto *vp = f.optional("viewport")) {
    Fields vf(*vp, "viewport");
    m.viewport.width = vf.integer("width");
    m.viewport.height = vf.integer("height");
    vf.finish();
    if(m.viewport.width <= 0 || m.viewport.height <= 0) {
      constraint("viewport", "width and height must be positive");
    }
  }

  const auto &chapters = f.required("chapters");
  if(!chapters.is_array()) {
    schema_error("chapters", "expected a list");
  }
  if(chapters.empty()) {
    constraint("chapters", "a course needs at least one chapter");
  }
  for(std::size_t c = 0; c < chapters.size(); ++c) {
    const auto cpath = fmt::format("chapters[{}]", c);
    Fields cf(chapters[c], cpath);
    ChapterSpec chapter;
    chapter.title = cf.string("title");
    const auto &pages = cf.required("pages");
    if(!pages.is_array()) {
      schema_error(cf.child("pages"), "expected a list");
    }
    if(pages.empty()) {
      constraint(cf.child("pages"), "a chapter needs at least one page");
    }
    for(std::size_t p = 0; p < pages.size(); ++p) {
      chapter.pages.push_back(read_page(pages[p], fmt::format("{}[{}]", cf.child("pages"), p), m.layout));
    }
    cf.finish();
    m.chapters.push_back(std::move(chapter));
  }

  if(const auto *ui = f.optional("uiStrings")) {
    if(!ui->is_object()) {
      schema_error("uiStrings", "expected an object keyed by language tag");
    }
    for(auto it = ui->begin(); it != ui->end(); ++it) {
      const auto lpath = fmt::format("uiStrings/{}", it.key());
      if(!model::is_language_tag(it.key())) {
        constraint(lpath, fmt::format("'{}' is not a language tag", it.key()));
      }
      if(!it->is_object()) {
        schema_error(lpath, "expected an object of strings");
      }
      auto &table = m.uiStrings[it.key()];
      for(auto kv = it->begin(); kv != it->end(); ++kv) {
        table[kv.key()] = as_string(*kv, fmt::format("{}/{}", lpath, kv.key()));
      }
    }
  }

  if(const auto *docs = f.optional("exerciseDocuments")) {
    if(!docs->is_array()) {
      schema_error("exerciseDocuments", "expected a list");
    }
    for(std::size_t i = 0; i < docs->size(); ++i) {
      Fields df((*docs)[i], fmt::format("exerciseDocuments[{}]", i));
      ExerciseSource src;
      src.path = df.string("path");
      if(!safe_relative_path(src.path)) {
        constraint(df.child("path"), fmt::format("'{}' must be a relative path inside the project", src.path));
      }
      const auto dialect = df.optional_string("dialect").value_or("canonical");
      const auto d = dialect_from_name(dialect);
      if(!d) {
        schema_error(df.child("dialect"), fmt::format("expected canonical or legacy, found \"{}\"", dialect));
      }
      src.dialect = *d;
      src.zeroBasedConfirmed = df.boolean("zeroBasedConfirmed", false);
      if(src.zeroBasedConfirmed && src.dialect != Dialect::Legacy) {
        constraint(df.child("zeroBasedConfirmed"), "only meaningful for legacy documents");
      }
      df.finish();
      m.exerciseDocuments.push_back(std::move(src));
    }
  }
  f.finish();

  for(const auto &ref : all_pages(m)) {
    for(const auto &a : ref.spec->anchors) {
      if(a.presentation == Presentation::Inline && effective_layout(m, *ref.spec) == PageLayout::Reflowable) {
        constraint(fmt::format("chapters[{}]/pages[{}]", ref.chapter, ref.page),
                   fmt::format("page '{}' is reflowable, so anchor '{}' must use dialog presentation",
                               ref.spec->sourcePath, a.exerciseId));
      }
    }
  }
  return m;
}

} // namespace exbook::ingest

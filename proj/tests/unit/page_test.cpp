#include <exbook/emit/data_document.hpp>
#include <exbook/emit/page.hpp>
#include <exbook/error.hpp>

#include "test_support.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>

using namespace exbook;
using namespace exbook::emit;
using namespace exbook::model;
using boost::property_tree::ptree;

namespace {

const LicenseInfo kLicense{"Fleur", "M. Photo", "CC BY-SA 4.0", "https://example.org/fleur"};

DefinitionMap defs() {
  DefinitionMap out;
  out["mc1"] = {"mc1",
                ExerciseKind::MultipleChoice,
                {task::MultipleChoice{"De quelle couleur est cette fleur?",
                                      {"bleu", "pourpre", "jaune"},
                                      {2},
                                      false,
                                      MediaRef{MediaKind::Video, "butterfly", {}}}}};
  out["g1"] = {"g1",
               ExerciseKind::DragDropImage,
               {task::DragDropImage{{MediaKind::Image, "fleur", kLicense}, {{"pétale", {0.1, 0.1, 0.2, 0.2}}}},
                task::DragDropImage{{MediaKind::Image, "fleur", kLicense}, {{"tige", {0.4, 0.5, 0.1, 0.3}}}}}};
  out["q1"] = {"q1", ExerciseKind::TextQuiz, {task::TextQuiz{"Capitale?", {"Paris"}, {}}}};
  out["ov"] = {"ov",
               ExerciseKind::MediaOverlay,
               {task::MediaOverlay{{MediaKind::Audio, "lecture", {}},
                                   {{"s1", 0, 1.5, std::string("Bonjour.")}, {"s2", 1.5, 3, std::string("Merci.")}}}}};
  return out;
}

ingest::CourseManifest course() {
  ingest::CourseManifest m;
  m.title = "Cours";
  m.language = "fr";
  m.layout = ingest::Layout::Fixed;
  m.chapters.push_back({"Chapitre", {{"p.xhtml", {}, {{"mc1", ingest::Presentation::Inline, true, true},
                                                      {"g1", ingest::Presentation::Inline, false, true},
                                                      {"q1", ingest::Presentation::Dialog, false, true}},
                                     "ov"}}});
  return m;
}

// every element, depth first, with its element name
void each_element(const ptree &t, const std::function<void(const std::string &, const ptree &)> &f) {
  for(const auto &[name, child] : t) {
    if(name == "<xmlattr>" || name == "<xmlcomment>") {
      continue;
    }
    f(name, child);
    each_element(child, f);
  }
}

const ptree *by_id(const ptree &root, const std::string &id, std::string *name = nullptr) {
  const ptree *found = nullptr;
  each_element(root, [&](const std::string &n, const ptree &e) {
    if(!found && e.get<std::string>("<xmlattr>.id", "") == id) {
      found = &e;
      if(name) {
        *name = n;
      }
    }
  });
  return found;
}

bool has_class(const ptree &e, const std::string &cls) {
  const auto classes = " " + e.get<std::string>("<xmlattr>.class", "") + " ";
  return classes.find(" " + cls + " ") != std::string::npos;
}

} // namespace

TEST_CASE("anchors carry the id, the kind class and the data attributes") {
  const auto m = course();
  const auto d = defs();
  const auto refs = ingest::all_pages(m);
  const auto page = emit_content_page(refs[0], m, d, R"(<h1>Les fleurs</h1><div id="mc1">placeholder</div><p>fin</p>)");
  CHECK(page.path == "OEBPS/text/chap01-page01.xhtml");
  CHECK(page.scripted);
  CHECK(page.dataPath == "OEBPS/data/chap01-page01.json");
  CHECK(page.layout == ingest::PageLayout::Fixed);
  CHECK(page.anchorIds == std::set<std::string>{"mc1", "g1", "q1"});

  const auto tree = test::parse_with_boost(page.bytes);
  std::string name;
  const auto *mc = by_id(tree, "mc1", &name);
  REQUIRE(mc);
  CHECK(name == "div");
  CHECK(has_class(*mc, "multiplechoice"));
  CHECK(mc->get<std::string>("<xmlattr>.data-exbook-kind") == "multiplechoice");
  CHECK(mc->get<std::string>("<xmlattr>.data-exbook-magnify") == "true");
  CHECK(mc->get<std::string>("<xmlattr>.data-exbook-presentation") == "inline");
  CHECK(page.bytes.find("placeholder") == std::string::npos);
  // placed where the author put it, before the closing paragraph
  CHECK(page.bytes.find("id=\"mc1\"") < page.bytes.find("<p>fin</p>"));

  const auto &body = tree.get_child("html.body");
  CHECK(body.get<std::string>("<xmlattr>.data-exbook-data") == "../data/chap01-page01.json");
  CHECK(tree.get<std::string>("html.head.meta.<xmlattr>.charset") == "utf-8");
  bool viewport = false;
  each_element(tree, [&](const std::string &n, const ptree &e) {
    if(n == "meta" && e.get<std::string>("<xmlattr>.name", "") == "viewport") {
      viewport = e.get<std::string>("<xmlattr>.content") == "width=1024, height=768";
    }
  });
  CHECK(viewport);
}

TEST_CASE("dialog anchors have a launch control and no inline region") {
  const auto m = course();
  const auto page = emit_content_page(ingest::all_pages(m)[0], m, defs(), "<p>x</p>");
  const auto tree = test::parse_with_boost(page.bytes);
  const auto *q = by_id(tree, "q1");
  REQUIRE(q);
  CHECK(has_class(*q, "exbook-dialog"));
  int launch = 0;
  int region = 0;
  each_element(*q, [&](const std::string &n, const ptree &e) {
    launch += n == "button" && has_class(e, "exbook-launch") ? 1 : 0;
    region += has_class(e, "exbook-region") ? 1 : 0;
  });
  CHECK(launch == 1);
  CHECK(region == 0);
  const auto *mc = by_id(tree, "mc1");
  int mcRegion = 0;
  each_element(*mc, [&](const std::string &, const ptree &e) { mcRegion += has_class(e, "exbook-region") ? 1 : 0; });
  CHECK(mcRegion == 1);
}

TEST_CASE("overlay fragments and attributions") {
  const auto m = course();
  const auto d = defs();
  const auto page = emit_content_page(ingest::all_pages(m)[0], m, d, "<p>x</p>");
  CHECK(page.fragmentIds.contains("s1"));
  CHECK(page.fragmentIds.contains("s2"));
  const auto s1 = std::find(page.fragmentOrder.begin(), page.fragmentOrder.end(), "s1");
  const auto s2 = std::find(page.fragmentOrder.begin(), page.fragmentOrder.end(), "s2");
  CHECK(s1 < s2);

  // one credit per distinct licensed media reference
  std::set<std::string> licensed;
  for(const auto &[id, def] : d) {
    for(const auto &r : media_refs(def)) {
      if(r.license) {
        licensed.insert(id + "/" + r.basename);
      }
    }
  }
  const auto tree = test::parse_with_boost(page.bytes);
  std::size_t credits = 0;
  each_element(tree, [&](const std::string &, const ptree &e) {
    if(has_class(e, "exbook-attribution")) {
      ++credits;
      CHECK(e.get<std::string>("<xmlattr>.data-exbook-media") == "fleur");
    }
  });
  CHECK(credits == licensed.size());
  CHECK(page.bytes.find("M. Photo") != std::string::npos);
  CHECK(page.bytes.find("https://example.org/fleur") != std::string::npos);
}

TEST_CASE("attribution fragment") {
  const auto ui = ui_strings_for(course(), "fr");
  const auto html = emit_attribution_fragment({"A & B", "C", "CC0", std::nullopt}, "img", ui);
  const auto tree = test::parse_with_boost(html);
  CHECK(tree.get<std::string>("p.span") == "A & B");
  CHECK(html.find("exbook-source") == std::string::npos);
}

TEST_CASE("pages without anchors are not scripted; bad sources fail") {
  auto m = course();
  m.chapters[0].pages[0].anchors.clear();
  m.chapters[0].pages[0].overlayRef.reset();
  const auto page = emit_content_page(ingest::all_pages(m)[0], m, defs(), "<p>x</p>");
  CHECK_FALSE(page.scripted);
  CHECK_FALSE(page.dataPath);
  CHECK(page.bytes.find("<script") == std::string::npos);

  try {
    emit_content_page(ingest::all_pages(m)[0], m, defs(), "<p>x");
    FAIL("accepted");
  } catch(const Error &e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    CHECK(std::string(e.what()).find("p.xhtml") != std::string::npos);
  }
  CHECK_THROWS_AS(emit_content_page(ingest::all_pages(m)[0], m, defs(), R"(<p id="a"/><p id="a"/>)"), Error);
}

#include <exbook/error.hpp>
#include <exbook/ingest/manifest.hpp>

#include <doctest.h>

using namespace exbook;
using namespace exbook::ingest;

namespace {

ErrorCode code_of(const std::string &text, std::string *message = nullptr) {
  try {
    parse_course_manifest(text);
  } catch(const Error &e) {
    if(message) {
      *message = e.what();
    }
    return e.code();
  }
  FAIL("accepted: ", text);
  return ErrorCode::Io;
}

} // namespace

TEST_CASE("minimal manifest gets defaults") {
  const auto m = parse_course_manifest(R"({"title": "T", "language": "de", "layout": "fixed",
    "chapters": [{"title": "Eins", "pages": [{"source": "pages/a.xhtml", "anchors": [{"exercise": "mc1"}]}]}]})");
  CHECK(m.title == "T");
  CHECK(m.language == "de");
  CHECK_FALSE(m.identifier);
  CHECK(m.layout == Layout::Fixed);
  CHECK(m.viewport == Viewport{1024, 768});
  REQUIRE(m.chapters.size() == 1);
  const auto &a = m.chapters[0].pages[0].anchors.at(0);
  CHECK(a.presentation == Presentation::Inline);
  CHECK_FALSE(a.magnify);
  CHECK(a.showLicense);
  CHECK(m.exerciseDocuments.empty());
  CHECK(effective_layout(m, m.chapters[0].pages[0]) == PageLayout::Fixed);
}

TEST_CASE("mixed layout, viewport and documents") {
  const auto m = parse_course_manifest(R"({"title": "T", "language": "fr-CA", "layout": "mixed",
    "viewport": {"width": 800, "height": 600},
    "uiStrings": {"fr": {"check": "Valider"}},
    "exerciseDocuments": [{"path": "ex/a.js", "dialect": "legacy", "zeroBasedConfirmed": true}, {"path": "ex/b.json"}],
    "chapters": [{"title": "Eins", "pages": [
      {"source": "a.xhtml", "layout": "reflowable", "anchors": [{"exercise": "q", "presentation": "dialog"}]},
      {"source": "b.xhtml", "overlay": "ov"}]}]})");
  CHECK(m.viewport == Viewport{800, 600});
  CHECK(m.uiStrings.at("fr").at("check") == "Valider");
  REQUIRE(m.exerciseDocuments.size() == 2);
  CHECK(m.exerciseDocuments[0].dialect == Dialect::Legacy);
  CHECK(m.exerciseDocuments[0].zeroBasedConfirmed);
  CHECK(m.exerciseDocuments[1].dialect == Dialect::Canonical);
  CHECK(effective_layout(m, m.chapters[0].pages[0]) == PageLayout::Reflowable);
  CHECK(effective_layout(m, m.chapters[0].pages[1]) == PageLayout::Fixed);
  CHECK(m.chapters[0].pages[1].overlayRef == "ov");
  const auto pages = all_pages(m);
  REQUIRE(pages.size() == 2);
  CHECK(page_stem(pages[1]) == "chap01-page02");
}

TEST_CASE("inline anchors on reflowable pages are rejected with the page named") {
  std::string message;
  CHECK(code_of(R"({"title": "T", "language": "fr", "layout": "reflowable",
    "chapters": [{"title": "C", "pages": [{"source": "pages/lecon.xhtml", "anchors": [{"exercise": "mc1"}]}]}]})",
                &message) == ErrorCode::ConstraintError);
  CHECK(message.find("pages/lecon.xhtml") != std::string::npos);
  CHECK(message.find("mc1") != std::string::npos);
}

TEST_CASE("manifest errors") {
  const std::string chapters = R"("chapters": [{"title": "C", "pages": [{"source": "p.xhtml"}]}])";
  CHECK(code_of(R"({"title": "T", "language": "fr", "layout": "fixed", "colour": 1, )" + chapters + "}") ==
        ErrorCode::SchemaError);
  CHECK(code_of(R"({"title": "T", "language": "fr", "layout": "scroll", )" + chapters + "}") == ErrorCode::SchemaError);
  CHECK(code_of(R"({"title": "", "language": "fr", "layout": "fixed", )" + chapters + "}") == ErrorCode::ConstraintError);
  CHECK(code_of(R"({"title": "T", "language": "f r", "layout": "fixed", )" + chapters + "}") ==
        ErrorCode::ConstraintError);
  CHECK(code_of(R"({"title": "T", "language": "fr", "layout": "fixed", "chapters": []})") == ErrorCode::ConstraintError);
  CHECK(code_of(R"({"title": "T", "language": "fr", "layout": "fixed", "viewport": {"width": 0, "height": 5}, )" +
                chapters + "}") == ErrorCode::ConstraintError);
  CHECK(code_of(R"({"title": "T", "language": "fr", "layout": "fixed",
    "chapters": [{"title": "C", "pages": [{"source": "../p.xhtml"}]}]})") == ErrorCode::ConstraintError);
  CHECK(code_of(R"({"title": "T", "language": "fr", "layout": "fixed",
    "chapters": [{"title": "C", "pages": [{"source": "p.xhtml", "layout": "fixed"}]}]})") == ErrorCode::ConstraintError);
  CHECK(code_of(R"({"title": "T", "language": "fr", "layout": "fixed",
    "exerciseDocuments": [{"path": "a.json", "zeroBasedConfirmed": true}], )" + chapters + "}") ==
        ErrorCode::ConstraintError);
  CHECK(code_of(R"({"title": "T", "language": "fr", "layout": "fixed" )" + chapters + "}") == ErrorCode::SyntaxError);
}

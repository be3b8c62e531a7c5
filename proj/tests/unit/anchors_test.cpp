#include <exbook/ingest/anchors.hpp>

#include <doctest.h>

using namespace exbook;
using namespace exbook::ingest;
using namespace exbook::model;

namespace {

CourseManifest course_with(std::vector<PageSpec> pages) {
  CourseManifest m;
  m.title = "T";
  m.language = "fr";
  m.layout = Layout::Fixed;
  m.chapters.push_back({"C", std::move(pages)});
  return m;
}

DefinitionMap defs() {
  DefinitionMap out;
  out["mc1"] = {"mc1", ExerciseKind::MultipleChoice, {task::MultipleChoice{"q", {"a", "b"}, {0}, false, {}}}};
  out["ov"] = {"ov",
               ExerciseKind::MediaOverlay,
               {task::MediaOverlay{{MediaKind::Audio, "reading", {}}, {{"l1", 0, 1, std::nullopt}}}}};
  return out;
}

} // namespace

TEST_CASE("a consistent course has an empty report") {
  const auto r = check_anchor_consistency(course_with({{"p.xhtml", {}, {{"mc1"}}, "ov"}}), defs());
  CHECK(r.empty());
}

TEST_CASE("unknown, duplicated and misplaced anchors") {
  auto r = check_anchor_consistency(course_with({{"p.xhtml", {}, {{"mc1"}, {"mc2"}}, "ov"}}), defs());
  CHECK(r.error_count() == 1);
  CHECK(r.contains("UnknownExercise", "mc2"));

  r = check_anchor_consistency(course_with({{"p.xhtml", {}, {{"mc1"}}, "ov"}, {"q.xhtml", {}, {{"mc1"}}, {}}}), defs());
  CHECK(r.error_count() == 1);
  CHECK(r.contains("DuplicateAnchor", "chapters[0]/pages[0]"));

  r = check_anchor_consistency(course_with({{"p.xhtml", {}, {{"mc1"}, {"ov"}}, {}}}), defs());
  CHECK(r.contains("MisplacedOverlay"));

  r = check_anchor_consistency(course_with({{"p.xhtml", {}, {}, "mc1"}}), defs());
  CHECK(r.contains("NotAnOverlay"));
  CHECK(r.contains("UnanchoredExercise", "ov"));
}

TEST_CASE("an unplaced exercise is only a warning") {
  auto d = defs();
  d["cw1"] = {"cw1", ExerciseKind::TextQuiz, {task::TextQuiz{"q", {"a"}, {}}}};
  const auto r = check_anchor_consistency(course_with({{"p.xhtml", {}, {{"mc1"}}, "ov"}}), d);
  CHECK(r.error_count() == 0);
  CHECK(r.warning_count() == 1);
  CHECK(r.contains("UnanchoredExercise", "cw1"));
}

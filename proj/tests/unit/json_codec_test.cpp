#include <exbook/error.hpp>
#include <exbook/ingest/exercise_document.hpp>
#include <exbook/ingest/json_codec.hpp>
#include <exbook/model/grade.hpp>
#include <exbook/model/sampling.hpp>
#include <exbook/model/variants.hpp>

#include <doctest.h>

using namespace exbook;
using namespace exbook::model;
using ingest::Dialect;

namespace {

std::string doc(const std::string &exercises) {
  return R"({"format": "exbook-exercises/1", "exercises": [)" + exercises + "]}";
}

ErrorCode code_of(const std::string &text) {
  try {
    ingest::parse_exercise_document(text, Dialect::Canonical);
  } catch(const Error &e) {
    return e.code();
  }
  FAIL("document was accepted: ", text);
  return ErrorCode::Io;
}

} // namespace

TEST_CASE("canonical multiple choice with defaults") {
  const auto parsed = ingest::parse_exercise_document(
      doc(R"({"id": "mc1", "kind": "multiplechoice", "tasks": [
            {"question": "De quelle couleur est cette fleur?", "answers": ["bleu", "pourpre", "jaune"],
             "correctAnswers": [2], "media": {"type": "video", "file": "butterfly"}}]})"),
      Dialect::Canonical);
  REQUIRE(parsed.definitions.size() == 1);
  const auto &d = parsed.definitions.at("mc1");
  CHECK(d.kind == ExerciseKind::MultipleChoice);
  const auto &t = std::get<task::MultipleChoice>(d.tasks.at(0));
  CHECK(t.answers.size() == 3);
  CHECK(t.correctAnswers == std::set<std::size_t>{2});
  CHECK_FALSE(t.multiSelect);
  CHECK(t.media->kind == MediaKind::Video);
  CHECK(parsed.order == std::vector<std::string>{"mc1"});
}

TEST_CASE("strict schema errors") {
  CHECK(code_of(R"({"format": "exbook-exercises/1", "exercises": [], "extra": 1})") == ErrorCode::SchemaError);
  CHECK(code_of(R"({"format": "other/1", "exercises": []})") == ErrorCode::SchemaError);
  CHECK(code_of(doc(R"({"id": "a", "kind": "essay", "tasks": []})")) == ErrorCode::SchemaError);
  CHECK(code_of(doc(R"({"id": "a", "kind": "textquiz", "tasks": [{"question": "q", "accepted": ["x"], "hint": "h"}]})")) ==
        ErrorCode::SchemaError);
  CHECK(code_of(doc(R"({"id": "a", "kind": "textquiz", "tasks": [{"question": 3, "accepted": ["x"]}]})")) ==
        ErrorCode::SchemaError);
  CHECK(code_of(doc(R"({"id": "a", "kind": "textquiz", "tasks": [{"question": "q", "accepted": ["x"]}]},
                       {"id": "a", "kind": "textquiz", "tasks": [{"question": "q", "accepted": ["x"]}]})")) ==
        ErrorCode::SchemaError);
}

TEST_CASE("invariant violations carry the report") {
  try {
    ingest::parse_exercise_document(
        doc(R"({"id": "mc1", "kind": "multiplechoice", "tasks": [{"question": "q", "answers": ["a", "b", "c"], "correctAnswers": [3]}]})"),
        Dialect::Canonical);
    FAIL("accepted");
  } catch(const Error &e) {
    CHECK(e.code() == ErrorCode::ValidationFailed);
    CHECK(e.report().contains("IndexOutOfRange"));
  }
}

TEST_CASE("syntax errors report line and column") {
  const std::string text = "{\n  \"format\": \"exbook-exercises/1\",\n  \"exercises\": [,]\n}";
  try {
    ingest::parse_exercise_document(text, Dialect::Canonical);
    FAIL("accepted");
  } catch(const Error &e) {
    CHECK(e.code() == ErrorCode::SyntaxError);
    REQUIRE(e.location());
    CHECK(e.location()->line == 3);
    CHECK(e.location()->column == 17);
  }
  const auto loc = ingest::locate("ab\nçd", 5);
  CHECK(loc.line == 2);
  CHECK(loc.column == 2);
}

TEST_CASE("serialize then parse is the identity over 200 generated definitions") {
  SeededRng rng(1234);
  for(int i = 0; i < 200; ++i) {
    const auto kind = kAllKinds[static_cast<std::size_t>(i) % kAllKinds.size()];
    const auto def = random_definition(kind, "d" + std::to_string(i), rng);
    const auto bytes = ingest::serialize_exercise_document({def});
    const auto back = ingest::parse_exercise_document(bytes, Dialect::Canonical);
    REQUIRE(back.definitions.size() == 1);
    CHECK_MESSAGE(back.definitions.at(def.id) == def, bytes);
    CHECK(ingest::serialize_exercise_document({back.definitions.at(def.id)}) == bytes);
  }
}

TEST_CASE("responses and grade results round-trip") {
  SeededRng rng(77);
  for(const auto kind : kAllKinds) {
    if(!is_gradeable(kind)) {
      continue;
    }
    for(int i = 0; i < 30; ++i) {
      const auto t = random_task(kind, rng);
      const auto r = random_response(t, rng);
      const auto back = ingest::response_from_json(ingest::to_json(r), "response");
      CHECK(back == r);
      const auto g = grade(t, r);
      CHECK(ingest::grade_result_from_json(ingest::to_json(g), "result") == g);
    }
  }
  const auto j = ingest::to_json(GradeResult{true, Score(1, 1), {ItemVerdict::Correct}, std::string("x")});
  CHECK(j.dump() == R"({"correct":true,"score":{"num":1,"den":1},"perItem":["correct"],"sampleSolution":"x"})");
}

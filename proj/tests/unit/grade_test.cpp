#include <exbook/error.hpp>
#include <exbook/model/grade.hpp>
#include <exbook/model/variants.hpp>

#include <doctest.h>

#include <map>

using namespace exbook;
using namespace exbook::model;

namespace {

task::MultipleChoice flower() {
  return {"De quelle couleur est cette fleur?", {"bleu", "pourpre", "jaune"}, {2}, false,
          MediaRef{MediaKind::Video, "butterfly", {}}};
}

} // namespace

TEST_CASE("flower question graded with the yellow answer") {
  const auto r = grade(flower(), response::MultipleChoice{{2}});
  CHECK(r.correct);
  CHECK(r.score == Score(1, 1));
  CHECK(r.perItem == std::vector{ItemVerdict::Correct, ItemVerdict::Correct, ItemVerdict::Correct});
  const auto wrong = grade(flower(), response::MultipleChoice{{0}});
  CHECK_FALSE(wrong.correct);
  CHECK(wrong.score == Score(0, 1));
}

TEST_CASE("order assignment counts matching positions") {
  task::OrderAssignment t{{std::string("a"), std::string("b"), std::string("c")}};
  // response [b, a, c]: item indices placed per position
  const auto r = grade(t, response::OrderAssignment{{1, 0, 2}});
  // enumeration: position 0 holds b (want a), 1 holds a (want b), 2 holds c
  int matches = 0;
  const std::vector<std::string> placed = {"b", "a", "c"};
  const std::vector<std::string> target = {"a", "b", "c"};
  for(std::size_t i = 0; i < 3; ++i) {
    matches += placed[i] == target[i] ? 1 : 0;
  }
  CHECK_FALSE(r.correct);
  CHECK(r.score == Score(matches, 3));
  CHECK(r.score == Score(1, 3));
}

TEST_CASE("order assignment accepts swaps of equal items") {
  task::OrderAssignment t{{std::string("x"), std::string("x"), std::string("y")}};
  CHECK(grade(t, response::OrderAssignment{{1, 0, 2}}).correct);
}

TEST_CASE("cloze gap without diacritic sensitivity") {
  task::Cloze t{{std::string("Il "), task::Gap{{"était"}, {false, false, true}}, std::string(" une fois")}};
  const auto r = grade(t, response::Cloze{{std::string("etait")}});
  CHECK(r.perItem == std::vector{ItemVerdict::Correct});
  CHECK(r.correct);
  task::Cloze strict{{task::Gap{{"était"}, {false, true, true}}}};
  CHECK(grade(strict, response::Cloze{{std::string("etait")}}).perItem == std::vector{ItemVerdict::Incorrect});
  CHECK(grade(strict, response::Cloze{{std::string("  ")}}).perItem == std::vector{ItemVerdict::Unanswered});
}

TEST_CASE("multiple choice penalty formula") {
  task::MultipleChoice t{"q", {"a", "b", "c", "d", "e"}, {0, 1, 2}, true, {}};
  auto oracle = [&](const std::set<std::size_t> &sel) {
    long hits = 0, fp = 0;
    for(auto s : sel) {
      (t.correctAnswers.contains(s) ? hits : fp) += 1;
    }
    return Score(std::max(0L, hits - fp), static_cast<long>(t.correctAnswers.size()));
  };
  for(unsigned mask = 0; mask < 32; ++mask) {
    std::set<std::size_t> sel;
    for(std::size_t i = 0; i < 5; ++i) {
      if(mask & (1u << i)) {
        sel.insert(i);
      }
    }
    const auto r = grade(t, response::MultipleChoice{sel});
    CHECK(r.score == oracle(sel));
    CHECK(r.correct == (sel == t.correctAnswers));
  }
  CHECK(grade(t, response::MultipleChoice{{0, 1, 3}}).score == Score(1, 3));
  CHECK(grade(t, response::MultipleChoice{{0, 3, 4}}).score == Score(0, 1));
}

TEST_CASE("unanswered items are reported distinctly") {
  task::DropDownList t{{task::Choice{{"a", "b"}, 1}, std::string(" "), task::Choice{{"c", "d"}, 0}}};
  const auto r = grade(t, response::DropDownList{{1, std::nullopt}});
  CHECK(r.perItem == std::vector{ItemVerdict::Correct, ItemVerdict::Unanswered});
  CHECK(r.score == Score(1, 2));
}

TEST_CASE("pair assignment reads displayed slots through rightOrder") {
  task::PairAssignment t{{{std::string("a"), std::string("1")}, {std::string("b"), std::string("2")}, {std::string("c"), std::string("3")}},
                         {2, 0, 1}};
  // slot 0 shows pair 2's right item, slot 1 pair 0's, slot 2 pair 1's
  CHECK(grade(t, response::PairAssignment{{1, 2, 0}}).correct);
  const auto r = grade(t, response::PairAssignment{{0, 2, std::nullopt}});
  CHECK(r.perItem == std::vector{ItemVerdict::Incorrect, ItemVerdict::Correct, ItemVerdict::Unanswered});
  CHECK_THROWS_AS(grade(t, response::PairAssignment{{0, 0, 1}}), Error);
}

TEST_CASE("group assignment by flattened member") {
  task::GroupAssignment t{{{"le", {std::string("livre"), std::string("stylo")}}, {"la", {std::string("table")}}}};
  CHECK(grade(t, response::GroupAssignment{{0, 0, 1}}).correct);
  CHECK(grade(t, response::GroupAssignment{{0, 1, 1}}).score == Score(2, 3));
  CHECK_THROWS_AS(grade(t, response::GroupAssignment{{0, 0}}), Error);
}

TEST_CASE("drag and drop uses the first zone containing the point") {
  task::DragDropImage t{MediaRef{MediaKind::Image, "bg", {}},
                        {{"big", {0.0, 0.0, 1.0, 1.0}}, {"small", {0.4, 0.4, 0.2, 0.2}}}};
  // the centre of "small" also lies in "big", which is listed first
  const auto r = grade(t, response::DragDropImage{{Point{0.1, 0.1}, Point{0.5, 0.5}}});
  CHECK(r.perItem == std::vector{ItemVerdict::Correct, ItemVerdict::Incorrect});
  task::DragDropImage reordered{t.background, {t.draggables[1], t.draggables[0]}};
  CHECK(grade(reordered, response::DragDropImage{{Point{0.5, 0.5}, Point{0.1, 0.1}}}).correct);
}

TEST_CASE("dictation always carries the sample solution") {
  task::Dictation t{MediaRef{MediaKind::Audio, "d", {}}, "Le ciel est bleu.", {false, true, true}};
  const auto miss = grade(t, response::Dictation{"le ciel est vert."});
  CHECK_FALSE(miss.correct);
  CHECK(miss.sampleSolution == "Le ciel est bleu.");
  const auto hit = grade(t, response::Dictation{"le  ciel est BLEU."});
  CHECK(hit.correct);
  CHECK(hit.sampleSolution == "Le ciel est bleu.");
  CHECK(grade(t, response::Dictation{}).sampleSolution == "Le ciel est bleu.");
}

TEST_CASE("text quiz accepts any listed answer") {
  task::TextQuiz t{"thank you?", {"merci", "merci beaucoup"}, {}};
  CHECK(grade(t, response::TextQuiz{"Merci Beaucoup"}).correct);
  CHECK_FALSE(grade(t, response::TextQuiz{"danke"}).correct);
  CHECK(grade(t, response::TextQuiz{"danke"}).sampleSolution == "merci");
}

TEST_CASE("memory grades every card") {
  task::Memory t{{std::string("un"), std::string("one"), std::string("deux"), std::string("two")}, {1, 0, 3, 2}};
  CHECK(grade(t, response::Memory{{{0, 1}, {2, 3}}}).correct);
  const auto r = grade(t, response::Memory{{{0, 2}}});
  CHECK(r.perItem == std::vector{ItemVerdict::Incorrect, ItemVerdict::Unanswered, ItemVerdict::Incorrect,
                                 ItemVerdict::Unanswered});
  CHECK_THROWS_AS(grade(t, response::Memory{{{0, 1}, {1, 2}}}), Error);
}

TEST_CASE("crossword verdict depends only on the solution word") {
  task::Crossword t;
  t.cells = {{0, 0, "C"}, {0, 1, "H"}, {0, 2, "A"}, {0, 3, "T"}};
  t.entries = {{"animal", task::Direction::Across, 0, 0, 4}};
  t.solutionCells = {{0, 1}, {0, 3}};
  // wrong letters outside the solution word do not matter for the verdict
  const auto r = grade(t, response::Crossword{{std::string("x"), std::string("h"), std::string("x"), std::string("T")}});
  CHECK(r.correct);
  CHECK(r.perItem[0] == ItemVerdict::Incorrect);
  const auto half = grade(t, response::Crossword{{std::nullopt, std::string("h"), std::nullopt, std::string("z")}});
  CHECK(half.score == Score(1, 2));
  CHECK_FALSE(half.correct);
}

TEST_CASE("kind mismatches, overlays and shape errors throw") {
  CHECK_THROWS_AS(grade(flower(), response::TextSelection{{1}}), Error);
  try {
    grade(flower(), response::TextSelection{{1}});
  } catch(const Error &e) {
    CHECK(e.code() == ErrorCode::KindMismatch);
  }
  task::MediaOverlay o{MediaRef{MediaKind::Audio, "a", {}}, {{"p", 0, 1, {}}}};
  try {
    grade(o, response::MultipleChoice{});
    FAIL("overlay graded");
  } catch(const Error &e) {
    CHECK(e.code() == ErrorCode::Ungradeable);
  }
  try {
    grade(flower(), response::MultipleChoice{{7}});
    FAIL("out-of-range selection graded");
  } catch(const Error &e) {
    CHECK(e.code() == ErrorCode::ShapeMismatch);
  }
  CHECK_THROWS_AS(correct_response(o), Error);
  CHECK_THROWS_AS(empty_response(o), Error);
}

namespace {

// Independent case fold for the test alphabet.
std::string fold(const std::string &s) {
  static const std::map<std::string, std::string> lower = {{"É", "é"}, {"À", "à"}, {"Ç", "ç"}};
  if(const auto it = lower.find(s); it != lower.end()) {
    return it->second;
  }
  if(s.size() == 1 && s[0] >= 'A' && s[0] <= 'Z') {
    return std::string(1, static_cast<char>(s[0] + 32));
  }
  return s;
}

} // namespace

TEST_CASE("crossword verdict equals a brute-force re-read of the solution cells") {
  const std::vector<std::string> alphabet = {"a", "b", "e", "é", "É", "à", "À", "ç", "Ç", "E", "B", "z"};
  SeededRng rng(2014);
  int checked = 0;
  for(int round = 0; round < 600; ++round) {
    const int rows = 1 + static_cast<int>(rng.below(5));
    const int cols = 1 + static_cast<int>(rng.below(5));
    // dense grid of letters; every row is one across entry
    task::Crossword t;
    std::map<std::pair<int, int>, std::string> key;
    for(int r = 0; r < rows; ++r) {
      for(int c = 0; c < cols; ++c) {
        const auto &l = alphabet[rng.below(alphabet.size())];
        t.cells.push_back({r, c, l});
        key[{r, c}] = l;
      }
      t.entries.push_back({"row", task::Direction::Across, r, 0, cols});
    }
    const auto word = 1 + rng.below(static_cast<std::uint64_t>(rows * cols));
    for(std::uint64_t i = 0; i < word; ++i) {
      t.solutionCells.push_back({static_cast<int>(rng.below(rows)), static_cast<int>(rng.below(cols))});
    }
    response::Crossword resp;
    std::map<std::pair<int, int>, std::optional<std::string>> filled;
    for(const auto &cell : t.cells) {
      const auto roll = rng.below(4);
      std::optional<std::string> v;
      if(roll == 0) {
        v = cell.letter;
      } else if(roll == 1) {
        v = alphabet[rng.below(alphabet.size())];
      } else if(roll == 2) {
        v = fold(cell.letter);
      }
      resp.letters.push_back(v);
      filled[{cell.row, cell.col}] = v;
    }
    std::string expected, typed;
    bool complete = true;
    for(const auto &pos : t.solutionCells) {
      expected += fold(key[{pos.row, pos.col}]) + "|";
      const auto &v = filled[{pos.row, pos.col}];
      complete = complete && v.has_value();
      typed += (v ? fold(*v) : std::string("?")) + "|";
    }
    CHECK(grade(t, resp).correct == (complete && expected == typed));
    ++checked;
  }
  CHECK(checked == 600);
}

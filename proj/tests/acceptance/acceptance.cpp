// One line per acceptance criterion; non-zero exit when any fails.

#include <exbook/app/commands.hpp>
#include <exbook/app/compiler.hpp>
#include <exbook/app/project.hpp>
#include <exbook/app/scaffold.hpp>
#include <exbook/error.hpp>
#include <exbook/ingest/exercise_document.hpp>
#include <exbook/model/grade.hpp>
#include <exbook/package/conformance.hpp>

#include "properties.hpp"
#include "test_support.hpp"

#include <fmt/format.h>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

using namespace exbook;
using namespace exbook::model;
namespace fs = std::filesystem;

namespace {

const char *kFlowerRecord = R"(// nested object literal
var multiplechoiceInput = {
  // question: question phrase
  // answer: given answers separated by a semicolon
  // correctAnswers: correct answers indices separated by a semicolon
  // multiSelect: can be "true" or "false", one or all are selectable
  // multiMedia (optional): type: image (.jpg), audio (.ogg AND .mp3), video (.mp4 AND .webm)
  //                               file: filename without extension

  // this must be same as id of <div class="multiplechoice" id="mc1" /> element in xhtml file
  mc1: {
    task1: {
      question: "De quelle couleur est cette fleur?",
      answers: "bleu;pourpre;jaune",
      correctAnswers: "2",
      multiSelect: "false",
      multiMedia: {
        type: "video",
        file: "butterfly"
      }
    },
    task2: {
      question: "Quelles langues sont parlées dans ce poème."
    }
  }
}
)";

struct Verdict {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Verdict legacy_fidelity() {
  const auto t0 = Clock::now();
  const auto parsed = ingest::parse_exercise_document(kFlowerRecord, ingest::Dialect::Legacy);
  const ExerciseDefinition expected{"mc1",
                                    ExerciseKind::MultipleChoice,
                                    {task::MultipleChoice{"De quelle couleur est cette fleur?",
                                                          {"bleu", "pourpre", "jaune"},
                                                          {2},
                                                          false,
                                                          MediaRef{MediaKind::Video, "butterfly", std::nullopt}}}};
  if(parsed.definitions.size() != 1 || !parsed.definitions.contains("mc1")) {
    return {false, fmt::format("{} definitions", parsed.definitions.size())};
  }
  const auto &def = parsed.definitions.at("mc1");
  if(!(def == expected)) {
    return {false, "definition differs from the record"};
  }
  const auto g = grade(def.tasks[0], response::MultipleChoice{{2}});
  const auto elapsed = seconds_since(t0);
  if(!g.correct || !(g.score == Score(1, 1))) {
    return {false, fmt::format("response {{2}} scored {}/{}", g.score.num(), g.score.den())};
  }
  return {elapsed < 1.0, fmt::format("exact definition, response {{2}} correct with score 1, {:.3f}s", elapsed)};
}

Verdict full_coverage_build() {
  const auto t0 = Clock::now();
  const auto result = app::compile_project(app::load_project(test::sample_course()), {});
  const auto report = package::validate_container(result.epub);
  const auto elapsed = seconds_since(t0);
  std::size_t kinds = 0;
  for(const auto kind : kAllKinds) {
    kinds += result.exercisesByKind.contains(kind) && result.exercisesByKind.at(kind) > 0 ? 1 : 0;
  }
  const bool pass = kinds == kAllKinds.size() && report.error_count() == 0 && elapsed < 10.0;
  return {pass, fmt::format("{} of {} kinds, {} conformance errors, {:.2f}s", kinds, kAllKinds.size(),
                            report.error_count(), elapsed)};
}

Verdict determinism() {
  test::TempDir tmp;
  std::ostringstream out;
  std::ostringstream err;
  for(const auto *name : {"first.epub", "second.epub"}) {
    app::BuildOptions o;
    o.projectDir = test::sample_course();
    o.outputPath = tmp / name;
    o.timestamp = "2014-03-11T00:00:00Z";
    if(app::cmd_build(o, out, err) != app::kExitOk) {
      return {false, "build failed: " + err.str()};
    }
  }
  const auto a = test::sha256_hex(test::slurp(tmp / "first.epub"));
  const auto b = test::sha256_hex(test::slurp(tmp / "second.epub"));
  return {a == b, fmt::format("sha256 {} / {}", a.substr(0, 16), b.substr(0, 16))};
}

std::string check_ocf(const std::string &epub) {
  const auto entries = test::python_zip_entries(epub);
  if(entries.empty()) {
    return "no entries";
  }
  const auto &first = entries.front();
  if(first.name != "mimetype") {
    return "first entry is " + first.name;
  }
  if(first.compressType != 0) {
    return fmt::format("mimetype compress_type {}", first.compressType);
  }
  if(first.data != "application/epub+zip" || first.fileSize != 20) {
    return "mimetype content differs";
  }
  // raw local header: signature, method 0, sizes 20, name, no extra field, data
  const auto u16 = [&](std::size_t at) {
    return static_cast<unsigned>(static_cast<unsigned char>(epub[at])) |
           static_cast<unsigned>(static_cast<unsigned char>(epub[at + 1])) << 8;
  };
  if(epub.compare(0, 4, "PK\x03\x04") != 0 || u16(8) != 0 || u16(18) != 20 || u16(22) != 20 || u16(26) != 8 ||
     u16(28) != 0 || epub.compare(30, 28, "mimetypeapplication/epub+zip") != 0) {
    return "local header bytes differ";
  }
  return {};
}

Verdict ocf_exactness() {
  test::TempDir tmp;
  app::scaffold_project(tmp / "scaffold", "Scaffold");
  std::vector<std::pair<std::string, std::string>> containers{
      {"sample", app::compile_project(app::load_project(test::sample_course()), {}).epub},
      {"scaffold", app::compile_project(app::load_project(tmp / "scaffold"), {}).epub}};
  for(const auto &[name, epub] : containers) {
    if(const auto problem = check_ocf(epub); !problem.empty()) {
      return {false, name + ": " + problem};
    }
  }
  return {true, fmt::format("{} containers checked with Python zipfile and raw header bytes", containers.size())};
}

Verdict oracle_properties() {
  const auto t0 = Clock::now();
  std::size_t kinds = 0;
  std::size_t total = 0;
  for(const auto kind : kAllKinds) {
    if(!is_gradeable(kind)) {
      continue;
    }
    const auto outcome = test::check_grading_properties(kind, 1000, 20140311 + static_cast<std::uint64_t>(kind));
    if(!outcome.ok() || outcome.cases < 1000) {
      return {false, outcome.failures.empty() ? fmt::format("{} cases for {}", outcome.cases, kind_name(kind))
                                              : outcome.failures.front()};
    }
    ++kinds;
    total += outcome.cases;
  }
  const auto elapsed = seconds_since(t0);
  return {elapsed < 60.0, fmt::format("{} cases over {} gradeable kinds, {:.2f}s", total, kinds, elapsed)};
}

Verdict cloze_round_trip() {
  const auto outcome = test::check_cloze_variants(500, 20140311);
  if(!outcome.ok()) {
    return {false, outcome.failures.front()};
  }
  return {outcome.cases >= 500, fmt::format("{} clozes", outcome.cases)};
}

Verdict smil_validity() {
  const auto outcome = test::check_smil_round_trip(500, 20140311, 0.001);
  if(!outcome.ok()) {
    return {false, outcome.failures.front()};
  }
  return {outcome.cases == 500, fmt::format("{} overlays within 1 ms", outcome.cases)};
}

Verdict media_redundancy() {
  const auto media = test::sample_course() / "media";
  std::vector<fs::path> files;
  for(const auto &e : fs::directory_iterator(media)) {
    const auto ext = e.path().extension().string();
    if(ext == ".ogg" || ext == ".mp3" || ext == ".mp4" || ext == ".webm") {
      files.push_back(e.path().filename());
    }
  }
  std::sort(files.begin(), files.end());
  if(files.empty()) {
    return {false, "the sample course has no audio or video"};
  }
  for(const auto &file : files) {
    test::TempDir tmp;
    test::copy_tree(test::sample_course(), tmp / "course");
    fs::remove(tmp / "course" / "media" / file);
    app::BuildOptions o;
    o.projectDir = tmp / "course";
    o.outputPath = tmp / "out.epub";
    std::ostringstream out;
    std::ostringstream err;
    const int status = app::cmd_build(o, out, err);
    const auto format = file.extension().string().substr(1);
    const auto text = err.str();
    if(status != app::kExitInvalid || text.find("MissingFormat") == std::string::npos ||
       text.find("missing its " + format + " file") == std::string::npos) {
      return {false, fmt::format("without {}: exit {}, {}", file.string(), status, text)};
    }
  }
  return {true, fmt::format("{} removals, each rejected with MissingFormat naming the format", files.size())};
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"legacy record fidelity", legacy_fidelity},
      {"full-coverage build", full_coverage_build},
      {"deterministic build", determinism},
      {"OCF mimetype entry", ocf_exactness},
      {"grading oracle properties", oracle_properties},
      {"cloze to drop-down round trip", cloze_round_trip},
      {"SMIL clock validity", smil_validity},
      {"media redundancy", media_redundancy},
  };
  int failed = 0;
  for(std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch(const std::exception &e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    failed += v.pass ? 0 : 1;
    std::cout << fmt::format("{} criterion {}: {} ({})\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, v.detail);
  }
  std::cout << fmt::format("{} of {} criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}

#include <exbook/app/compiler.hpp>
#include <exbook/app/project.hpp>
#include <exbook/app/scaffold.hpp>
#include <exbook/error.hpp>
#include <exbook/ingest/exercise_document.hpp>
#include <exbook/ingest/json_codec.hpp>

#include <fmt/format.h>

namespace exbook::app {

namespace fs = std::filesystem;
using namespace model;

namespace {

MediaRef image(std::string name) {
  return {MediaKind::Image, std::move(name), LicenseInfo{"Placeholder picture", "Course author", "CC BY 4.0", std::nullopt}};
}
MediaRef audio(std::string name) { return {MediaKind::Audio, std::move(name), std::nullopt}; }
MediaRef video(std::string name) { return {MediaKind::Video, std::move(name), std::nullopt}; }

ExerciseDefinition make(std::string id, TaskSpec task) {
  ExerciseDefinition d;
  d.id = std::move(id);
  d.kind = kind_of(task);
  d.tasks.push_back(std::move(task));
  d.meta.cefrLevel = CefrLevel::A1;
  return d;
}

const char *kPlaceholderSvg = R"(<svg xmlns="http://www.w3.org/2000/svg" width="400" height="300" viewBox="0 0 400 300">
  <rect width="400" height="300" fill="#dfe7ef"/>
  <circle cx="200" cy="150" r="60" fill="#7a9cc6"/>
</svg>
)";

} // namespace

std::vector<ExerciseDefinition> example_definitions() {
  std::vector<ExerciseDefinition> out;

  out.push_back(make("pairs1", task::PairAssignment{{{std::string("chien"), std::string("dog")},
                                                     {std::string("chat"), std::string("cat")},
                                                     {std::string("oiseau"), std::string("bird")}},
                                                    {2, 0, 1}}));
  out.push_back(make("groups1", task::GroupAssignment{{{"masculin", {std::string("le livre"), std::string("le stylo")}},
                                                       {"féminin", {std::string("la table"), std::string("la porte")}}}}));
  out.push_back(make("order1", task::OrderAssignment{{std::string("lundi"), std::string("mardi"),
                                                      std::string("mercredi"), std::string("jeudi")}}));
  out.push_back(make("dragdrop1", task::DragDropImage{image("picture"),
                                                      {{"ciel", {0.0, 0.0, 1.0, 0.3}}, {"soleil", {0.35, 0.3, 0.3, 0.4}}}}));

  task::Cloze cloze;
  cloze.segments = {std::string("Je "), task::Gap{{"suis"}, {}}, std::string(" étudiant et tu "),
                    task::Gap{{"es"}, {}}, std::string(" professeur.")};
  out.push_back(make("cloze1", cloze));

  out.push_back(make("dictation1", task::Dictation{audio("voice"), "Bonjour tout le monde.", NormalizationPolicy::lenient()}));
  out.push_back(make("mc1", task::MultipleChoice{"Quelle est la couleur du ciel ?", {"rouge", "bleu", "vert"}, {1}, false,
                                                 video("clip")}));
  out.push_back(make("quiz1", task::TextQuiz{"Comment dit-on « thank you » ?", {"merci", "merci beaucoup"}, {}}));

  // CHAT across, CIEL down, sharing the C
  task::Crossword cw;
  const std::string across = "CHAT";
  const std::string down = "CIEL";
  for(int i = 0; i < 4; ++i) {
    cw.cells.push_back({0, i, std::string(1, across[static_cast<std::size_t>(i)])});
  }
  for(int i = 1; i < 4; ++i) {
    cw.cells.push_back({i, 0, std::string(1, down[static_cast<std::size_t>(i)])});
  }
  cw.entries = {{"Animal qui miaule", task::Direction::Across, 0, 0, 4}, {"Il est bleu", task::Direction::Down, 0, 0, 4}};
  cw.solutionCells = {{0, 2}, {3, 0}};
  out.push_back(make("crossword1", cw));

  task::DropDownList dd;
  dd.segments = {std::string("Nous "), task::Choice{{"sommes", "êtes", "sont"}, 0}, std::string(" à Paris.")};
  out.push_back(make("dropdown1", dd));

  out.push_back(make("memory1", task::Memory{{std::string("un"), std::string("one"), std::string("deux"), std::string("two")},
                                             {1, 0, 3, 2}}));
  out.push_back(make("select1", task::TextSelection{{"Le", "chat", "noir", "dort", "sur", "le", "lit"}, {1, 6}}));

  task::MediaOverlay overlay{audio("reading"), {}};
  overlay.clips.push_back({"line1", 0.0, 2.5, "Bonjour, je m'appelle Léa."});
  overlay.clips.push_back({"line2", 2.5, 5.25, "J'habite à Lyon."});
  out.push_back(make("overlay1", overlay));
  return out;
}

void scaffold_project(const fs::path &dir, std::string_view title) {
  if(fs::exists(dir)) {
    throw Error(ErrorCode::Io, fmt::format("'{}' already exists", dir.string()));
  }
  const auto defs = example_definitions();

  ingest::json anchors = ingest::json::array();
  std::string overlayId;
  for(const auto &d : defs) {
    if(d.kind == ExerciseKind::MediaOverlay) {
      overlayId = d.id;
      continue;
    }
    ingest::json a{{"exercise", d.id}};
    if(d.kind == ExerciseKind::Memory) {
      a["presentation"] = "dialog";
    }
    anchors.push_back(a);
  }
  ingest::json page{{"source", "pages/page1.xhtml"}, {"anchors", anchors}, {"overlay", overlayId}};
  ingest::json manifest{{"title", std::string(title)},
                        {"language", "fr"},
                        {"layout", "fixed"},
                        {"viewport", {{"width", 1024}, {"height", 768}}},
                        {"chapters", ingest::json::array({{{"title", "Premiers pas"}, {"pages", ingest::json::array({page})}}})}};

  fs::create_directories(dir);
  write_file(dir / ingest::kManifestFile, manifest.dump(2) + "\n");
  write_file(dir / kExercisesDir / "examples.json", ingest::serialize_exercise_document(defs));
  write_file(dir / "pages" / "page1.xhtml",
             "<h1>Premiers pas</h1>\n<p>Chaque exercice ci-dessous montre un type d'activité.</p>\n"
             "<div id=\"cloze1\"></div>\n");
  write_file(dir / kMediaDir / "picture.svg", kPlaceholderSvg);
  for(const auto *name : {"voice", "reading"}) {
    write_file(dir / kMediaDir / fmt::format("{}.ogg", name), fmt::format("placeholder ogg audio: {}\n", name));
    write_file(dir / kMediaDir / fmt::format("{}.mp3", name), fmt::format("placeholder mp3 audio: {}\n", name));
  }
  write_file(dir / kMediaDir / "clip.mp4", "placeholder mp4 video\n");
  write_file(dir / kMediaDir / "clip.webm", "placeholder webm video\n");
  const auto runtime = builtin_runtime();
  write_file(dir / kRuntimeDir / "exbook-runtime.js", runtime.script);
  write_file(dir / kRuntimeDir / "exbook-runtime.css", runtime.stylesheet);
}

} // namespace exbook::app

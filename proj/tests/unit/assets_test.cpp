#include <exbook/error.hpp>
#include <exbook/ingest/assets.hpp>
#include <exbook/model/variants.hpp>

#include <doctest.h>

#include <algorithm>

using namespace exbook;
using namespace exbook::ingest;
using namespace exbook::model;

namespace {

ExerciseDefinition dictation(std::string id, std::string audio) {
  return {std::move(id), ExerciseKind::Dictation, {task::Dictation{{MediaKind::Audio, std::move(audio), {}}, "Bonjour.", {}}}};
}

ExerciseDefinition video_question(std::string id, std::string video) {
  return {std::move(id),
          ExerciseKind::MultipleChoice,
          {task::MultipleChoice{"q", {"a", "b"}, {0}, false, MediaRef{MediaKind::Video, std::move(video), {}}}}};
}

DefinitionMap defs_of(std::vector<ExerciseDefinition> defs) {
  DefinitionMap out;
  for(auto &d : defs) {
    out.emplace(d.id, std::move(d));
  }
  return out;
}

Error failure(const DefinitionMap &defs, const std::vector<ListingEntry> &listing) {
  try {
    resolve_assets(defs, listing);
  } catch(const Error &e) {
    return e;
  }
  FAIL("resolved");
  return Error(ErrorCode::Io, "");
}

} // namespace

TEST_CASE("audio with both formats resolves") {
  const auto catalog =
      resolve_assets(defs_of({dictation("dictation1", "voice")}), {{"voice.ogg", 10}, {"sub/voice.mp3", 20}});
  const auto &e = catalog.entries.at("voice");
  CHECK(e.kind == MediaKind::Audio);
  REQUIRE(e.files.size() == 2);
  CHECK(e.files[0] == AssetFile{MediaFormat::Ogg, "voice.ogg", 10});
  CHECK(e.files[1] == AssetFile{MediaFormat::Mp3, "sub/voice.mp3", 20});
  CHECK(catalog.totalBytes == 30);
  CHECK(catalog.warnings.empty());
  CHECK(media_href("voice", MediaFormat::Mp3) == "OEBPS/media/voice.mp3");
}

TEST_CASE("a missing second format names the format") {
  const auto e = failure(defs_of({video_question("mc1", "butterfly")}), {{"butterfly.mp4", 5}});
  CHECK(e.code() == ErrorCode::MissingFormat);
  CHECK(e.report().contains("MissingFormat", "webm"));
  CHECK(e.report().contains("MissingFormat", "butterfly"));
  CHECK(std::string(e.what()).find("webm") != std::string::npos);
}

TEST_CASE("missing asset and collisions") {
  const auto missing = failure(defs_of({dictation("d", "voice"), video_question("v", "clip")}), {{"clip.mp4", 1}});
  CHECK(missing.code() == ErrorCode::MissingAsset);
  CHECK(missing.report().contains("MissingAsset", "voice"));
  CHECK(missing.report().contains("MissingFormat", "webm"));

  const auto collision =
      failure(defs_of({dictation("d", "voice")}), {{"a/voice.ogg", 1}, {"b/voice.ogg", 1}, {"voice.mp3", 1}});
  CHECK(collision.code() == ErrorCode::AssetCollision);

  const auto images = failure(defs_of({{"g",
                                        ExerciseKind::DragDropImage,
                                        {task::DragDropImage{{MediaKind::Image, "plan", {}}, {{"a", {0, 0, 1, 1}}}}}}}),
                              {{"plan.gif", 1}});
  CHECK(images.code() == ErrorCode::MissingAsset);
}

TEST_CASE("no media means an empty catalog") {
  const DefinitionMap defs = defs_of({{"q", ExerciseKind::TextQuiz, {task::TextQuiz{"q", {"a"}, {}}}}});
  const auto catalog = resolve_assets(defs, {});
  CHECK(catalog.entries.empty());
  CHECK(catalog.totalBytes == 0);
  CHECK(catalog.warnings.empty());
}

TEST_CASE("warnings for unused files and size") {
  const auto catalog =
      resolve_assets(defs_of({dictation("d", "voice")}), {{"voice.ogg", 60}, {"voice.mp3", 60}, {"notes.txt", 1}, {"x.png", 1}},
                     {100});
  CHECK(catalog.warnings.contains("UnreferencedAsset", "notes.txt"));
  CHECK(catalog.warnings.contains("UnreferencedAsset", "x.png"));
  CHECK(catalog.warnings.contains("LargeContainer"));
  CHECK(catalog.warnings.error_count() == 0);
}

TEST_CASE("resolution does not depend on listing order") {
  const auto defs = defs_of({dictation("d", "voice"), video_question("v", "clip"), video_question("w", "clip")});
  std::vector<ListingEntry> listing{{"voice.ogg", 1}, {"voice.mp3", 2}, {"clip.mp4", 3}, {"clip.webm", 4}, {"extra.svg", 5}};
  const auto reference = resolve_assets(defs, listing);
  SeededRng rng(5);
  for(int i = 0; i < 50; ++i) {
    rng.shuffle(listing);
    const auto c = resolve_assets(defs, listing);
    CHECK(c.entries == reference.entries);
    CHECK(c.totalBytes == reference.totalBytes);
    CHECK(c.warnings.findings() == reference.warnings.findings());
  }
}

TEST_CASE("licenses travel into the catalog") {
  const LicenseInfo cc{"Tournesol", "A. Peintre", "CC BY 4.0", "https://example.org/t"};
  auto def = video_question("v", "clip");
  std::get<task::MultipleChoice>(def.tasks[0]).media->license = cc;
  const auto catalog = resolve_assets(defs_of({def}), {{"clip.mp4", 1}, {"clip.webm", 1}});
  CHECK(catalog.entries.at("clip").license == cc);
}

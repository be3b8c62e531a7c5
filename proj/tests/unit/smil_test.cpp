#include <exbook/error.hpp>
#include <exbook/model/variants.hpp>
#include <exbook/package/smil.hpp>

#include "test_support.hpp"

#include <doctest.h>

#include <cmath>
#include <regex>

using namespace exbook;
using namespace exbook::model;

namespace {

// Independent reader for the two clock forms we emit.
double parse_clock(const std::string &s) {
  static const std::regex timecount(R"((\d+(?:\.\d+)?)s)");
  static const std::regex full(R"((\d+):(\d{2}):(\d{2}(?:\.\d+)?))");
  std::smatch m;
  if(std::regex_match(s, m, timecount)) {
    return std::stod(m[1]);
  }
  if(std::regex_match(s, m, full)) {
    return std::stod(m[1]) * 3600 + std::stod(m[2]) * 60 + std::stod(m[3]);
  }
  FAIL("not a clock value: ", s);
  return -1;
}

emit::EmittedPage page(std::vector<std::string> ids) {
  emit::EmittedPage p;
  p.path = "OEBPS/text/chap01-page01.xhtml";
  p.fragmentOrder = ids;
  p.fragmentIds = {ids.begin(), ids.end()};
  return p;
}

ExerciseDefinition overlay(std::vector<task::Clip> clips) {
  return {"ov", ExerciseKind::MediaOverlay, {task::MediaOverlay{{MediaKind::Audio, "lecture", {}}, std::move(clips)}}};
}

const std::map<std::string, std::string> kAudio{{"lecture", "OEBPS/media/lecture.mp3"}};

} // namespace

TEST_CASE("clock formatting") {
  CHECK(package::format_clock(2.5) == "2.500s");
  CHECK(package::format_clock(0) == "0.000s");
  CHECK(package::format_clock(5.105) == "5.105s");
  CHECK(package::format_full_clock(3725.25) == "1:02:05.250");
  SeededRng rng(1);
  for(int i = 0; i < 1000; ++i) {
    const double t = static_cast<double>(rng.below(100000000)) / 7919.0;
    CHECK(std::abs(parse_clock(package::format_clock(t)) - t) <= 0.0005 + 1e-9);
    CHECK(std::abs(parse_clock(package::format_full_clock(t)) - t) <= 0.0005 + 1e-9);
  }
}

TEST_CASE("a single clip") {
  const auto smil = package::build_media_overlay_smil(overlay({{"s1", 0, 2.5, {}}}), page({"s1"}), kAudio,
                                                      "OEBPS/overlays/chap01-page01.smil");
  CHECK(smil.totalDuration == doctest::Approx(2.5));
  REQUIRE(smil.pars.size() == 1);
  CHECK(smil.pars[0].textRef == "../text/chap01-page01.xhtml#s1");
  CHECK(smil.pars[0].audioRef == "../media/lecture.mp3");
  const auto tree = test::parse_with_boost(smil.bytes);
  const auto &audio = tree.get_child("smil.body.seq.par.audio.<xmlattr>");
  CHECK(parse_clock(audio.get<std::string>("clipBegin")) == doctest::Approx(0.0));
  CHECK(parse_clock(audio.get<std::string>("clipEnd")) == doctest::Approx(2.5));
  CHECK(tree.get<std::string>("smil.<xmlattr>.version") == "3.0");
}

TEST_CASE("three clips with a gap") {
  const auto smil = package::build_media_overlay_smil(
      overlay({{"a", 0, 1.0, {}}, {"b", 1.0, 2.25, {}}, {"c", 3.0, 3.75, {}}}), page({"x", "a", "b", "c"}), kAudio,
      "OEBPS/overlays/p.smil");
  CHECK(smil.totalDuration == doctest::Approx(3.0));
  const auto tree = test::parse_with_boost(smil.bytes);
  double sum = 0;
  std::vector<std::string> refs;
  for(const auto &[name, par] : tree.get_child("smil.body.seq")) {
    if(name != "par") {
      continue;
    }
    refs.push_back(par.get<std::string>("text.<xmlattr>.src"));
    sum += parse_clock(par.get<std::string>("audio.<xmlattr>.clipEnd")) -
           parse_clock(par.get<std::string>("audio.<xmlattr>.clipBegin"));
  }
  CHECK(sum == doctest::Approx(3.0));
  CHECK(refs == std::vector<std::string>{"../text/chap01-page01.xhtml#a", "../text/chap01-page01.xhtml#b",
                                         "../text/chap01-page01.xhtml#c"});
}

TEST_CASE("dangling and out-of-order fragments") {
  try {
    package::build_media_overlay_smil(overlay({{"a", 0, 1, {}}, {"zz", 1, 2, {}}}), page({"a"}), kAudio, "OEBPS/o.smil");
    FAIL("accepted");
  } catch(const Error &e) {
    CHECK(e.code() == ErrorCode::DanglingFragment);
    CHECK(std::string(e.what()).find("zz") != std::string::npos);
  }
  try {
    package::build_media_overlay_smil(overlay({{"b", 0, 1, {}}, {"a", 1, 2, {}}}), page({"a", "b"}), kAudio, "OEBPS/o.smil");
    FAIL("accepted");
  } catch(const Error &e) {
    CHECK(e.code() == ErrorCode::ConstraintError);
  }
  CHECK_THROWS_AS(package::build_media_overlay_smil(overlay({{"a", 0, 1, {}}}), page({"a"}), {}, "OEBPS/o.smil"), Error);
}

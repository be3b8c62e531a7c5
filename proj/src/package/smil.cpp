#include <exbook/emit/xml.hpp>
#include <exbook/error.hpp>
#include <exbook/package/plan.hpp>
#include <exbook/package/smil.hpp>

#include <fmt/format.h>

#include <cmath>

namespace exbook::package {

namespace {

long long millis(double seconds) { return std::llround(seconds * 1000.0); }

} // namespace

std::string format_clock(double seconds) {
  const auto ms = millis(seconds);
  return fmt::format("{}.{:03}s", ms / 1000, ms % 1000);
}

std::string format_full_clock(double seconds) {
  const auto ms = millis(seconds);
  const auto s = ms / 1000;
  return fmt::format("{}:{:02}:{:02}.{:03}", s / 3600, (s / 60) % 60, s % 60, ms % 1000);
}

SmilOverlay build_media_overlay_smil(const model::ExerciseDefinition &overlay, const emit::EmittedPage &page,
                                     const std::map<std::string, std::string> &audioHrefs, std::string smilPath) {
  SmilOverlay out;
  out.path = std::move(smilPath);
  out.textPath = page.path;
  const auto dir = out.path.substr(0, out.path.rfind('/') + 1);
  const auto textHref = relative_href(dir, page.path);

  std::map<std::string, std::size_t> position;
  for(std::size_t i = 0; i < page.fragmentOrder.size(); ++i) {
    position.emplace(page.fragmentOrder[i], i);
  }

  double total = 0;
  std::optional<std::size_t> previous;
  for(const auto &t : overlay.tasks) {
    const auto &task = std::get<model::task::MediaOverlay>(t);
    const auto audio = audioHrefs.find(task.audio.basename);
    if(audio == audioHrefs.end()) {
      throw Error(ErrorCode::MissingAsset, fmt::format("no audio file for '{}'", task.audio.basename));
    }
    const auto audioHref = relative_href(dir, audio->second);
    for(const auto &clip : task.clips) {
      const auto at = position.find(clip.textFragmentId);
      if(at == position.end()) {
        throw Error(ErrorCode::DanglingFragment,
                    fmt::format("overlay '{}' refers to fragment '{}', which is not on {}", overlay.id,
                                clip.textFragmentId, page.path));
      }
      if(previous && at->second <= *previous) {
        throw Error(ErrorCode::ConstraintError,
                    fmt::format("overlay '{}': clip '{}' comes before the previous clip's fragment in the page",
                                overlay.id, clip.textFragmentId));
      }
      previous = at->second;
      out.pars.push_back({textHref + "#" + clip.textFragmentId, audioHref, clip.clipBegin, clip.clipEnd});
      total += clip.clipEnd - clip.clipBegin;
    }
  }
  out.totalDuration = static_cast<double>(millis(total)) / 1000.0;

  emit::XmlWriter w;
  w.open("smil", {{"xmlns", "http://www.w3.org/ns/SMIL"}, {"xmlns:epub", "http://www.idpf.org/2007/ops"}, {"version", "3.0"}});
  w.open("body");
  w.open("seq", {{"id", "seq1"}, {"epub:textref", textHref}});
  for(std::size_t i = 0; i < out.pars.size(); ++i) {
    const auto &p = out.pars[i];
    w.open("par", {{"id", fmt::format("par{}", i + 1)}});
    w.empty("text", {{"src", p.textRef}});
    w.empty("audio", {{"src", p.audioRef}, {"clipBegin", format_clock(p.clipBegin)}, {"clipEnd", format_clock(p.clipEnd)}});
    w.close();
  }
  w.close();
  w.close();
  w.close();
  out.bytes = w.str();
  return out;
}

} // namespace exbook::package

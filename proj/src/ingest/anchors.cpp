#include <exbook/ingest/anchors.hpp>

#include <fmt/format.h>

#include <map>

namespace exbook::ingest {

Report check_anchor_consistency(const CourseManifest &course, const model::DefinitionMap &defs) {
  Report report;
  std::map<std::string, std::string> placed; // id -> where first placed

  auto place = [&](const std::string &id, const std::string &path) {
    const auto [it, fresh] = placed.emplace(id, path);
    if(!fresh) {
      report.error("DuplicateAnchor", path, fmt::format("'{}' is already placed at {}", id, it->second));
    }
    return fresh;
  };

  for(const auto &ref : all_pages(course)) {
    const auto pagePath = fmt::format("chapters[{}]/pages[{}]", ref.chapter, ref.page);
    for(std::size_t i = 0; i < ref.spec->anchors.size(); ++i) {
      const auto &a = ref.spec->anchors[i];
      const auto path = fmt::format("{}/anchors[{}]", pagePath, i);
      const auto def = defs.find(a.exerciseId);
      if(def == defs.end()) {
        report.error("UnknownExercise", path, fmt::format("no exercise is defined with id '{}'", a.exerciseId));
        continue;
      }
      if(!place(a.exerciseId, path)) {
        continue;
      }
      if(def->second.kind == model::ExerciseKind::MediaOverlay) {
        report.error("MisplacedOverlay", path,
                     fmt::format("'{}' is a media overlay; reference it with the page's overlay field", a.exerciseId));
      }
    }
    if(const auto &overlay = ref.spec->overlayRef) {
      const auto path = pagePath + "/overlay";
      const auto def = defs.find(*overlay);
      if(def == defs.end()) {
        report.error("UnknownExercise", path, fmt::format("no exercise is defined with id '{}'", *overlay));
      } else if(place(*overlay, path) && def->second.kind != model::ExerciseKind::MediaOverlay) {
        report.error("NotAnOverlay", path,
                     fmt::format("'{}' is a {} exercise, not a media overlay", *overlay,
                                 model::kind_name(def->second.kind)));
      }
    }
  }

  for(const auto &[id, def] : defs) {
    if(!placed.contains(id)) {
      report.warning("UnanchoredExercise", id, fmt::format("'{}' is defined but no page places it", id));
    }
  }
  return report;
}

} // namespace exbook::ingest

#include <exbook/emit/stylesheet.hpp>
#include <exbook/model/types.hpp>

#include <fmt/format.h>

namespace exbook::emit {

std::string emit_stylesheet(const ingest::CourseManifest &course) {
  std::string css = "/* generated by exbook */\n";
  css += "body.exbook-page { margin: 0; font-family: serif; line-height: 1.4; }\n";
  css += ".exbook-content { padding: 1em; }\n";

  if(course.layout != ingest::Layout::Reflowable) {
    const auto w = course.viewport.width;
    const auto h = course.viewport.height;
    css += fmt::format("@page {{ size: {}px {}px; margin: 0; }}\n", w, h);
    css += fmt::format("body.exbook-fixed {{ width: {}px; height: {}px; overflow: hidden; position: relative; }}\n", w, h);
  }

  css += ".exbook-exercise { margin: 1em 0; padding: 0.5em; border: 1px solid #888; border-radius: 4px; }\n";
  css += ".exbook-exercise.exbook-dialog { border-style: dashed; }\n";
  css += ".exbook-launch { font: inherit; padding: 0.3em 1em; }\n";
  css += ".exbook-fallback { font-style: italic; color: #555; }\n";
  css += ".exbook-attributions { font-size: 0.75em; color: #444; }\n";
  css += ".exbook-attribution { margin: 0.2em 0; }\n";
  css += ".exbook-clip.-epub-media-overlay-active, .exbook-clip.exbook-active { background: #ffe680; }\n";

  for(const auto kind : model::kAllKinds) {
    css += fmt::format(".exbook-exercise.{0} {{ --exbook-kind: {0}; }}\n", model::kind_name(kind));
  }
  return css;
}

} // namespace exbook::emit

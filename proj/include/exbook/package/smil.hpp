#pragma once

#include <exbook/emit/page.hpp>
#include <exbook/model/types.hpp>

#include <string>
#include <vector>

namespace exbook::package {

struct SmilPar {
  std::string textRef;  // relative to the SMIL document, with #fragment
  std::string audioRef;
  double clipBegin = 0;
  double clipEnd = 0;
};

struct SmilOverlay {
  std::string path;     // container path of the SMIL document
  std::string textPath; // container path of the page it narrates
  std::vector<SmilPar> pars;
  double totalDuration = 0; // seconds, rounded to the millisecond
  std::string bytes;
};

/// "12.345s": seconds with millisecond precision.
std::string format_clock(double seconds);
/// "0:00:12.345", used for media:duration.
std::string format_full_clock(double seconds);

/// One par per clip of every task in the definition, in task order. Each
/// task's audio reference is looked up in `audioHrefs` (basename -> container
/// path). Throws Error(DanglingFragment) when a clip's fragment is not on the
/// page and Error(ConstraintError) when clips do not follow document order.
SmilOverlay build_media_overlay_smil(const model::ExerciseDefinition &overlay, const emit::EmittedPage &page,
                                     const std::map<std::string, std::string> &audioHrefs, std::string smilPath);

} // namespace exbook::package

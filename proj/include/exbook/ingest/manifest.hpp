#pragma once

#include <exbook/ingest/exercise_document.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exbook::ingest {

enum class Layout { Fixed, Reflowable, Mixed };
enum class PageLayout { Fixed, Reflowable };
enum class Presentation { Inline, Dialog };

std::string_view layout_name(Layout l);
std::string_view page_layout_name(PageLayout l);
std::string_view presentation_name(Presentation p);

struct Anchor {
  std::string exerciseId;
  Presentation presentation = Presentation::Inline;
  bool magnify = false;
  bool showLicense = true;
};

struct PageSpec {
  std::string sourcePath;
  std::optional<PageLayout> layout; // mixed courses only
  std::vector<Anchor> anchors;
  std::optional<std::string> overlayRef;
};

struct ChapterSpec {
  std::string title;
  std::vector<PageSpec> pages;
};

struct Viewport {
  int width = 1024;
  int height = 768;
  bool operator==(const Viewport &) const = default;
};

struct ExerciseSource {
  std::string path;
  Dialect dialect = Dialect::Canonical;
  bool zeroBasedConfirmed = false;
};

using UiStrings = std::map<std::string, std::map<std::string, std::string>>;

struct CourseManifest {
  std::string title;
  std::string language;
  std::optional<std::string> identifier;
  Layout layout = Layout::Reflowable;
  Viewport viewport;
  std::vector<ChapterSpec> chapters;
  UiStrings uiStrings;
  std::vector<ExerciseSource> exerciseDocuments; // empty: discover under exercises/
};

inline constexpr std::string_view kManifestFile = "course.json";

CourseManifest parse_course_manifest(std::string_view bytes);

PageLayout effective_layout(const CourseManifest &course, const PageSpec &page);

struct PageRef {
  std::size_t chapter = 0;
  std::size_t page = 0;
  const PageSpec *spec = nullptr;
};

/// Pages in reading order.
std::vector<PageRef> all_pages(const CourseManifest &course);

/// "chapNN-pageNN", the stem of every per-page container file.
std::string page_stem(const PageRef &ref);

} // namespace exbook::ingest

#pragma once

#include <exbook/emit/data_document.hpp>
#include <exbook/ingest/manifest.hpp>
#include <exbook/model/types.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace exbook::emit {

struct EmittedPage {
  std::string path;  // container path
  std::string bytes;
  std::set<std::string> anchorIds;
  std::set<std::string> fragmentIds;      // every element id on the page
  std::vector<std::string> fragmentOrder; // the same ids in document order
  ingest::PageLayout layout = ingest::PageLayout::Reflowable;
  bool scripted = false;
  std::optional<std::string> dataPath; // container path of the page's data document
};

/// `source` is the author's XHTML fragment (body content). An element whose
/// id names one of the page's anchors is replaced by the generated anchor;
/// anchors without a placeholder are appended after the content.
/// Throws Error(SyntaxError) for a malformed fragment and
/// Error(ConstraintError) for duplicate ids.
EmittedPage emit_content_page(const ingest::PageRef &page, const ingest::CourseManifest &course,
                              const model::DefinitionMap &defs, std::string_view source);

/// Learner-visible credit for one licensed media file.
std::string emit_attribution_fragment(const model::LicenseInfo &license, std::string_view basename,
                                      const StringTable &ui);

} // namespace exbook::emit

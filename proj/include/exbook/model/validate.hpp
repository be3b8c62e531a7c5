#pragma once

#include <exbook/model/types.hpp>
#include <exbook/report.hpp>

#include <string_view>

namespace exbook::model {

/// Checks every TaskSpec invariant. Paths have the form
/// `<id>/tasks[<n>]/<field>[...]`. Problems become report entries; this never throws.
Report validate_definition(const ExerciseDefinition &def);

/// Same checks for a single task, rooted at `path`.
Report validate_task(const TaskSpec &task, std::string_view path);

/// Shape accepted for exercise ids and page fragment ids: an XML name
/// without colons.
bool is_fragment_id(std::string_view id);

/// Subtags of 1 to 8 ASCII alphanumerics joined by hyphens.
bool is_language_tag(std::string_view tag);

bool is_valid_basename(std::string_view basename);

} // namespace exbook::model

#pragma once

#include <exbook/ingest/manifest.hpp>
#include <exbook/model/types.hpp>
#include <exbook/report.hpp>

namespace exbook::ingest {

/// Cross-links page anchors and overlay references with exercise ids.
/// Errors: UnknownExercise, DuplicateAnchor, MisplacedOverlay, NotAnOverlay.
/// Warning: UnanchoredExercise.
Report check_anchor_consistency(const CourseManifest &course, const model::DefinitionMap &defs);

} // namespace exbook::ingest

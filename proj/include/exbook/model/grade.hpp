#pragma once

#include <exbook/model/types.hpp>

namespace exbook::model {

/// Reference grading oracle. Pure and deterministic.
///
/// Per-kind rules:
///  - MultipleChoice, TextSelection: score = max(0, hits - false picks) / |correct|;
///    perItem has one entry per option (selected-ness matches the key).
///  - Cloze, DropDownList, Dictation, TextQuiz: fraction of gaps answered
///    correctly; text compares under the gap's NormalizationPolicy.
///  - PairAssignment, GroupAssignment, DragDropImage, Memory: fraction of
///    correctly placed elements (Memory counts cards).
///  - OrderAssignment: fraction of positions holding an item equal to the target.
///  - Crossword: perItem per cell; score is the fraction of solution-word
///    cells filled correctly, so the verdict depends only on the solution word.
///
/// Missing answers count as wrong and are reported as Unanswered.
///
/// Throws Error(KindMismatch) when the response is for another kind,
/// Error(Ungradeable) for MediaOverlay and Error(ShapeMismatch) when the
/// response arity or indices do not fit the task.
GradeResult grade(const TaskSpec &task, const Response &response);

/// A point inside draggable `i`'s zone that no earlier, different zone
/// covers; nullopt when the zone cannot be hit under the first-listed rule.
std::optional<Point> reachable_drop_point(const task::DragDropImage &task, std::size_t i);

/// The response that answers every item correctly.
Response correct_response(const TaskSpec &task);

/// The response with every item unanswered.
Response empty_response(const TaskSpec &task);

} // namespace exbook::model

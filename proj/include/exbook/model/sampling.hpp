#pragma once

#include <exbook/model/types.hpp>
#include <exbook/model/variants.hpp>

#include <string>

namespace exbook::model {

// Random but always valid tasks and well-shaped responses. Used to build the
// grading fixture corpus and by the property suites.

TaskSpec random_task(ExerciseKind kind, SeededRng &rng);

/// Mixes correct, wrong and unanswered items for the given task.
Response random_response(const TaskSpec &task, SeededRng &rng);

ExerciseDefinition random_definition(ExerciseKind kind, std::string id, SeededRng &rng, std::size_t maxTasks = 3);

NormalizationPolicy random_policy(SeededRng &rng);

/// A short word from a French-flavoured pool (with accents and mixed case).
std::string random_word(SeededRng &rng);

} // namespace exbook::model

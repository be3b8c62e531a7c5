#pragma once

#include <exbook/model/types.hpp>

#include <filesystem>
#include <vector>

namespace exbook::app {

/// One small example per exercise kind, in kind order.
std::vector<model::ExerciseDefinition> example_definitions();

/// Writes a buildable project: manifest, one chapter, the 13 examples,
/// placeholder media and the runtime bundle. Error(Io) if `dir` exists.
void scaffold_project(const std::filesystem::path &dir, std::string_view title);

} // namespace exbook::app

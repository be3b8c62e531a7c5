#pragma once

#include <exbook/app/project.hpp>
#include <exbook/model/types.hpp>
#include <exbook/package/plan.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>

namespace exbook::app {

struct CompileSettings {
  std::int64_t timestamp = 0;
  bool strict = true;
  std::optional<ingest::Layout> layoutOverride;
  std::optional<std::filesystem::path> runtimeBundle;
};

struct CompileResult {
  std::string epub;
  Report report; // warnings that did not stop the build
  std::size_t pages = 0;
  std::map<model::ExerciseKind, std::size_t> exercisesByKind;
  std::vector<std::string> entries;
  bool placeholderRuntime = false;
};

/// Placeholder bundle compiled into the tool.
package::RuntimeBundle builtin_runtime();

/// Whole pipeline in memory. Failing checks raise Error(ValidationFailed)
/// carrying the report; the finished container is self-checked before it is
/// returned.
CompileResult compile_project(Project project, const CompileSettings &settings);

} // namespace exbook::app

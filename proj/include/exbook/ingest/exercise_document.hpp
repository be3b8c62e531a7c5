#pragma once

#include <exbook/error.hpp>
#include <exbook/model/types.hpp>
#include <exbook/report.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace exbook::ingest {

enum class Dialect { Canonical, Legacy };

std::string_view dialect_name(Dialect d);
std::optional<Dialect> dialect_from_name(std::string_view name);

inline constexpr std::string_view kExerciseFormat = "exbook-exercises/1";

struct ParseOptions {
  // Legacy only: the author has checked that correctAnswers are 0-based.
  bool zeroBasedConfirmed = false;
};

struct ParsedDocument {
  model::DefinitionMap definitions;
  std::vector<std::string> order; // ids in document order
  Report warnings;
};

/// Both dialects end the same way: every definition passes
/// validate_definition or Error(ValidationFailed) carries the report.
ParsedDocument parse_exercise_document(std::string_view bytes, Dialect dialect, const ParseOptions &options = {});

std::string serialize_exercise_document(const std::vector<model::ExerciseDefinition> &defs);

/// Line and column (1-based) of a byte offset.
SourceLocation locate(std::string_view text, std::size_t offset);

} // namespace exbook::ingest

#pragma once

#include <exbook/model/types.hpp>

#include <json.hpp>

#include <initializer_list>
#include <string>
#include <string_view>

namespace exbook::ingest {

using json = nlohmann::ordered_json;

/// Strict view over a JSON object: every key must be consumed before
/// `finish()`, otherwise the first unknown key raises Error(SchemaError).
class Fields {
public:
  Fields(const json &value, std::string path);

  const std::string &path() const noexcept { return path_; }
  std::string child(std::string_view key) const;

  bool has(std::string_view key) const;
  const json &required(std::string_view key);
  const json *optional(std::string_view key);

  std::string string(std::string_view key);
  std::optional<std::string> optional_string(std::string_view key);
  bool boolean(std::string_view key, bool fallback);
  std::size_t index(std::string_view key);
  int integer(std::string_view key);
  double number(std::string_view key);

  void finish() const;

private:
  const json &value_;
  std::string path_;
  std::vector<std::string> seen_;
};

/// Parses UTF-8 JSON; failures become Error(SyntaxError) with line and column.
json parse_json_text(std::string_view bytes);

[[noreturn]] void schema_error(const std::string &path, const std::string &message);

std::string as_string(const json &v, const std::string &path);
std::size_t as_index(const json &v, const std::string &path);
double as_number(const json &v, const std::string &path);

json to_json(const model::MediaRef &m);
json to_json(const model::Item &item);
json to_json(const model::NormalizationPolicy &p);
json to_json(const model::TaskSpec &task);
json to_json(const model::ExerciseDefinition &def);
json to_json(const model::Response &response);
json to_json(const model::GradeResult &result);

model::MediaRef media_from_json(const json &v, const std::string &path);
model::TaskSpec task_from_json(model::ExerciseKind kind, const json &v, const std::string &path);
model::ExerciseDefinition definition_from_json(const json &v, const std::string &path);
model::Response response_from_json(const json &v, const std::string &path);
model::GradeResult grade_result_from_json(const json &v, const std::string &path);

} // namespace exbook::ingest

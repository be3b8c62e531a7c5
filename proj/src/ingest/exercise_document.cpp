#include <exbook/error.hpp>
#include <exbook/ingest/exercise_document.hpp>
#include <exbook/ingest/json_codec.hpp>
#include <exbook/ingest/legacy.hpp>
#include <exbook/model/validate.hpp>

#include <fmt/format.h>

namespace exbook::ingest {

std::string_view dialect_name(Dialect d) { return d == Dialect::Canonical ? "canonical" : "legacy"; }

std::optional<Dialect> dialect_from_name(std::string_view name) {
  if(name == "canonical") {
    return Dialect::Canonical;
  }
  if(name == "legacy") {
    return Dialect::Legacy;
  }
  return std::nullopt;
}

SourceLocation locate(std::string_view text, std::size_t offset) {
  SourceLocation loc{1, 1};
  offset = std::min(offset, text.size());
  for(std::size_t i = 0; i < offset; ++i) {
    if(text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else if((static_cast<unsigned char>(text[i]) & 0xC0) != 0x80) {
      ++loc.column;
    }
  }
  return loc;
}

namespace {

ParsedDocument parse_canonical(std::string_view bytes) {
  const auto root = parse_json_text(bytes);
  Fields f(root, "");
  const auto format = f.string("format");
  if(format != kExerciseFormat) {
    schema_error("format", fmt::format("expected \"{}\", found \"{}\"", kExerciseFormat, format));
  }
  ParsedDocument doc;
  const auto &list = f.required("exercises");
  if(!list.is_array()) {
    schema_error("exercises", "expected a list");
  }
  for(std::size_t i = 0; i < list.size(); ++i) {
    auto def = definition_from_json(list[i], fmt::format("exercises[{}]", i));
    if(doc.definitions.contains(def.id)) {
      schema_error(fmt::format("exercises[{}]/id", i), fmt::format("duplicate exercise id '{}'", def.id));
    }
    doc.order.push_back(def.id);
    doc.definitions.emplace(def.id, std::move(def));
  }
  f.finish();
  return doc;
}

} // namespace

ParsedDocument parse_exercise_document(std::string_view bytes, Dialect dialect, const ParseOptions &options) {
  auto doc = dialect == Dialect::Canonical ? parse_canonical(bytes) : parse_legacy_document(bytes, options);
  Report failures;
  for(const auto &id : doc.order) {
    const auto report = model::validate_definition(doc.definitions.at(id));
    for(const auto &finding : report.findings()) {
      if(finding.severity == Severity::Error) {
        failures.add(finding);
      } else {
        doc.warnings.add(finding);
      }
    }
  }
  if(failures.has_errors()) {
    throw Error(ErrorCode::ValidationFailed,
                fmt::format("{} invalid exercise definition field(s): {}", failures.error_count(),
                            failures.findings().front().message),
                failures);
  }
  return doc;
}

std::string serialize_exercise_document(const std::vector<model::ExerciseDefinition> &defs) {
  json root{{"format", kExerciseFormat}};
  auto list = json::array();
  for(const auto &d : defs) {
    list.push_back(to_json(d));
  }
  root["exercises"] = list;
  return root.dump(2) + "\n";
}

} // namespace exbook::ingest

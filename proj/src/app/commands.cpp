#include <exbook/app/commands.hpp>
#include <exbook/app/scaffold.hpp>
#include <exbook/app/timestamp.hpp>
#include <exbook/error.hpp>
#include <exbook/ingest/json_codec.hpp>
#include <exbook/model/grade.hpp>
#include <exbook/model/sampling.hpp>
#include <exbook/model/variants.hpp>
#include <exbook/package/conformance.hpp>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include <fstream>
#include <ostream>
#include <random>

namespace exbook::app {

namespace fs = std::filesystem;
using ingest::json;

namespace {

int exit_for(const Error &e) { return e.code() == ErrorCode::Io ? kExitIo : kExitInvalid; }

void print_report(const Report &report, bool asJson, std::ostream &err) {
  if(report.empty()) {
    return;
  }
  err << (asJson ? report.to_json() : report.to_text());
  if(asJson) {
    err << '\n';
  }
}

int print_error(const Error &e, bool asJson, std::ostream &err) {
  fmt::print(err, "error [{}]: {}", error_code_name(e.code()), e.what());
  if(e.location()) {
    fmt::print(err, " (line {}, column {})", e.location()->line, e.location()->column);
  }
  err << '\n';
  print_report(e.report(), asJson, err);
  return exit_for(e);
}

void write_atomically(const fs::path &target, std::string_view bytes) {
  const auto dir = target.has_parent_path() ? target.parent_path() : fs::path(".");
  std::error_code ec;
  fs::create_directories(dir, ec);
  std::random_device rd;
  const auto temp = dir / fmt::format(".{}.{:08x}.tmp", target.filename().string(), rd());
  try {
    write_file(temp, bytes);
    fs::rename(temp, target);
  } catch(const fs::filesystem_error &e) {
    fs::remove(temp, ec);
    throw Error(ErrorCode::Io, fmt::format("cannot move the container into place: {}", e.what()));
  } catch(...) {
    fs::remove(temp, ec);
    throw;
  }
}

std::string human_size(std::uint64_t bytes) {
  if(bytes < 1024) {
    return fmt::format("{} B", bytes);
  }
  if(bytes < 1024 * 1024) {
    return fmt::format("{:.1f} KiB", static_cast<double>(bytes) / 1024.0);
  }
  return fmt::format("{:.1f} MiB", static_cast<double>(bytes) / (1024.0 * 1024.0));
}

} // namespace

int cmd_build(const BuildOptions &options, std::ostream &out, std::ostream &err) {
  auto outputPath = options.outputPath.value_or(
      options.projectDir / (fs::weakly_canonical(options.projectDir).filename().string() + ".epub"));
  if(outputPath.extension() != ".epub") {
    fmt::print(err, "error: output path '{}' must end in .epub\n", outputPath.string());
    return kExitIo;
  }
  CompileSettings settings;
  try {
    settings.timestamp = resolve_timestamp(options.timestamp ? std::optional<std::string_view>(*options.timestamp)
                                                             : std::nullopt);
  } catch(const std::invalid_argument &e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitIo;
  }
  settings.strict = options.strict;
  settings.layoutOverride = options.layoutOverride;
  settings.runtimeBundle = options.runtimeBundle;

  try {
    auto result = compile_project(load_project(options.projectDir), settings);
    write_atomically(outputPath, result.epub);
    print_report(result.report, options.jsonReport, err);
    fmt::print(out, "wrote {} ({})\n", outputPath.string(), human_size(result.epub.size()));
    fmt::print(out, "pages: {}\n", result.pages);
    std::size_t total = 0;
    for(const auto &[kind, n] : result.exercisesByKind) {
      total += n;
    }
    fmt::print(out, "exercises: {}\n", total);
    for(const auto &[kind, n] : result.exercisesByKind) {
      fmt::print(out, "  {:<16} {}\n", model::kind_name(kind), n);
    }
    if(result.placeholderRuntime) {
      fmt::print(out, "runtime: built-in placeholder (no runtime/ folder and no --runtime-bundle)\n");
    }
    return kExitOk;
  } catch(const Error &e) {
    return print_error(e, options.jsonReport, err);
  }
}

int cmd_validate(const fs::path &target, bool jsonReport, std::ostream &out, std::ostream &err) {
  try {
    Report report;
    if(fs::is_directory(target)) {
      report = check_project(load_project(target));
    } else {
      if(!fs::is_regular_file(target)) {
        fmt::print(err, "error: '{}' does not exist\n", target.string());
        return kExitIo;
      }
      report = package::validate_container(read_file(target));
    }
    print_report(report, jsonReport, err);
    fmt::print(out, "{}: {} error(s), {} warning(s)\n", target.string(), report.error_count(), report.warning_count());
    return report.has_errors() ? kExitInvalid : kExitOk;
  } catch(const Error &e) {
    return print_error(e, jsonReport, err);
  }
}

int cmd_new(const fs::path &dir, std::ostream &out, std::ostream &err) {
  try {
    scaffold_project(dir, dir.filename().empty() ? "New course" : dir.filename().string());
  } catch(const Error &e) {
    return print_error(e, false, err);
  }
  fmt::print(out, "created {} with {} example exercises\n", dir.string(), example_definitions().size());
  return kExitOk;
}

int cmd_inspect(const fs::path &projectDir, const std::string &exerciseId, std::ostream &out, std::ostream &err) {
  try {
    const auto project = load_project(projectDir);
    const auto it = project.definitions.find(exerciseId);
    if(it == project.definitions.end()) {
      fmt::print(err, "error: no exercise '{}' in {}\n", exerciseId, projectDir.string());
      return kExitInvalid;
    }
    const auto &def = it->second;
    out << ingest::to_json(def).dump(2) << '\n';
    if(!model::is_gradeable(def.kind)) {
      out << "ungradeable\n";
      return kExitOk;
    }
    for(std::size_t i = 0; i < def.tasks.size(); ++i) {
      const auto &t = def.tasks[i];
      fmt::print(out, "task {} all-correct response: {}\n", i + 1,
                 ingest::to_json(model::grade(t, model::correct_response(t))).dump());
      fmt::print(out, "task {} empty response: {}\n", i + 1,
                 ingest::to_json(model::grade(t, model::empty_response(t))).dump());
    }
    return kExitOk;
  } catch(const Error &e) {
    return print_error(e, false, err);
  }
}

int cmd_fixtures(const fs::path &dir, std::size_t perKind, std::uint64_t seed, std::ostream &out, std::ostream &err) {
  try {
    json index{{"format", kFixtureFormat}, {"seed", seed}, {"kinds", json::array()}};
    for(const auto kind : model::kAllKinds) {
      if(!model::is_gradeable(kind)) {
        continue;
      }
      const auto kindSeed = seed ^ (static_cast<std::uint64_t>(kind) + 1) * 0x9E3779B97F4A7C15ull;
      model::SeededRng rng(kindSeed);
      json cases = json::array();
      for(std::size_t i = 0; i < perKind; ++i) {
        const auto task = model::random_task(kind, rng);
        const auto response = i % 10 == 0   ? model::empty_response(task)
                              : i % 10 == 1 ? model::correct_response(task)
                                            : model::random_response(task, rng);
        cases.push_back({{"task", ingest::to_json(task)},
                         {"response", ingest::to_json(response)},
                         {"result", ingest::to_json(model::grade(task, response))}});
      }
      const auto name = std::string(model::kind_name(kind));
      json doc{{"format", kFixtureFormat}, {"kind", name}, {"seed", kindSeed}, {"cases", cases}};
      write_file(dir / (name + ".json"), doc.dump(1) + "\n");
      index["kinds"].push_back({{"kind", name}, {"file", name + ".json"}, {"cases", perKind}});
    }
    write_file(dir / "index.json", index.dump(2) + "\n");
    fmt::print(out, "wrote {} fixture files to {}\n", index["kinds"].size(), dir.string());
    return kExitOk;
  } catch(const Error &e) {
    return print_error(e, false, err);
  }
}

} // namespace exbook::app

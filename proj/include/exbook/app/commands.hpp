#pragma once

#include <exbook/app/compiler.hpp>

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace exbook::app {

// Exit statuses: 0 success, 1 validation problems, 2 I/O or usage problems.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitIo = 2;

struct BuildOptions {
  std::filesystem::path projectDir = ".";
  std::optional<std::filesystem::path> outputPath; // default <dir>/<dirname>.epub
  std::optional<std::string> timestamp;
  bool strict = true;
  std::optional<ingest::Layout> layoutOverride;
  std::optional<std::filesystem::path> runtimeBundle;
  bool jsonReport = false;
};

int cmd_build(const BuildOptions &options, std::ostream &out, std::ostream &err);
int cmd_validate(const std::filesystem::path &target, bool jsonReport, std::ostream &out, std::ostream &err);
int cmd_new(const std::filesystem::path &dir, std::ostream &out, std::ostream &err);
int cmd_inspect(const std::filesystem::path &projectDir, const std::string &exerciseId, std::ostream &out,
                std::ostream &err);

inline constexpr std::string_view kFixtureFormat = "exbook-grading-fixtures/1";

/// Writes <dir>/<kind>.json for every gradeable kind plus <dir>/index.json.
int cmd_fixtures(const std::filesystem::path &dir, std::size_t perKind, std::uint64_t seed, std::ostream &out,
                 std::ostream &err);

} // namespace exbook::app

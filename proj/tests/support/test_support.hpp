#pragma once

#include <boost/property_tree/ptree.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace exbook::test {

std::filesystem::path source_dir();
std::filesystem::path sample_course();
std::filesystem::path cli_path();

class TempDir {
public:
  TempDir();
  ~TempDir();
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;
  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(std::string_view name) const { return path_ / name; }

private:
  std::filesystem::path path_;
};

std::string slurp(const std::filesystem::path &path);
void spit(const std::filesystem::path &path, std::string_view bytes);
void copy_tree(const std::filesystem::path &from, const std::filesystem::path &to);

struct CommandResult {
  int status = -1;
  std::string output; // stdout and stderr together
};
CommandResult run_command(const std::string &command);

// Entries as seen by Python's zipfile module, in archive order.
struct PyZipEntry {
  std::string name;
  int compressType = -1;
  std::uint64_t fileSize = 0;
  std::uint32_t crc = 0;
  std::string data;
};
std::vector<PyZipEntry> python_zip_entries(std::string_view archive);

// Independent XML reader (Boost.PropertyTree); throws on malformed input.
boost::property_tree::ptree parse_with_boost(const std::string &xml);

// Plain bitwise CRC-32 (reflected 0xEDB88320).
std::uint32_t reference_crc32(std::string_view bytes);

std::string sha256_hex(std::string_view bytes);

} // namespace exbook::test

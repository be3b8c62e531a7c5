#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace exbook::package {

struct ZipInput {
  std::string_view path;
  std::string_view bytes;
  bool deflate = true;
};

struct DosDateTime {
  std::uint16_t time = 0;
  std::uint16_t date = 0;
};

/// MS-DOS timestamp of a UTC instant, clamped to the representable range
/// 1980-01-01 .. 2107-12-31. Seconds are halved, as the format requires.
DosDateTime dos_date_time(std::int64_t unixSeconds);

/// Writes entries in the given order. Every entry gets the same timestamp,
/// no extra fields, and no data descriptors, so equal input means equal bytes.
std::string write_zip(const std::vector<ZipInput> &entries, std::int64_t unixSeconds);

struct ZipEntry {
  std::string path;
  std::uint16_t method = 0; // 0 stored, 8 deflated
  std::uint16_t flags = 0;
  std::uint32_t crc = 0;
  std::uint64_t compressedSize = 0;
  std::uint64_t size = 0;
  std::uint16_t localExtraLength = 0;
  std::uint64_t localOffset = 0;
  DosDateTime modified;
  std::string data; // uncompressed
};

/// Reads the central directory and every local entry; throws
/// Error(NotAZip) on anything structurally wrong, including CRC mismatches.
/// Entries come back in local-header order.
std::vector<ZipEntry> read_zip(std::string_view bytes);

std::uint32_t crc32_of(std::string_view bytes);

} // namespace exbook::package

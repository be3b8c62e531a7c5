#include <exbook/error.hpp>
#include <exbook/package/zip.hpp>

#include <fmt/format.h>
#include <zlib.h>

#include <algorithm>
#include <chrono>
#include <limits>

namespace exbook::package {

namespace {

constexpr std::uint32_t kLocalSig = 0x04034b50;
constexpr std::uint32_t kCentralSig = 0x02014b50;
constexpr std::uint32_t kEndSig = 0x06054b50;
constexpr std::uint16_t kUtf8Flag = 0x0800;

void put16(std::string &out, std::uint16_t v) {
  out += static_cast<char>(v & 0xFF);
  out += static_cast<char>(v >> 8);
}

void put32(std::string &out, std::uint32_t v) {
  for(int i = 0; i < 4; ++i) {
    out += static_cast<char>((v >> (8 * i)) & 0xFF);
  }
}

std::string deflate_raw(std::string_view in) {
  z_stream zs{};
  if(deflateInit2(&zs, 9, Z_DEFLATED, -15, 8, Z_DEFAULT_STRATEGY) != Z_OK) {
    throw std::runtime_error("deflateInit2 failed");
  }
  std::string out(deflateBound(&zs, static_cast<uLong>(in.size())), '\0');
  zs.next_in = reinterpret_cast<Bytef *>(const_cast<char *>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  zs.next_out = reinterpret_cast<Bytef *>(out.data());
  zs.avail_out = static_cast<uInt>(out.size());
  const int rc = deflate(&zs, Z_FINISH);
  const auto produced = zs.total_out;
  deflateEnd(&zs);
  if(rc != Z_STREAM_END) {
    throw std::runtime_error("deflate did not finish");
  }
  out.resize(produced);
  return out;
}

[[noreturn]] void not_a_zip(const std::string &why) { throw Error(ErrorCode::NotAZip, "not a ZIP archive: " + why); }

std::string inflate_raw(std::string_view in, std::uint64_t expected, const std::string &name) {
  if(expected > (1ull << 32)) {
    not_a_zip(fmt::format("entry '{}' is too large", name));
  }
  std::string out(static_cast<std::size_t>(expected), '\0');
  z_stream zs{};
  if(inflateInit2(&zs, -15) != Z_OK) {
    throw std::runtime_error("inflateInit2 failed");
  }
  zs.next_in = reinterpret_cast<Bytef *>(const_cast<char *>(in.data()));
  zs.avail_in = static_cast<uInt>(in.size());
  char dummy = 0;
  zs.next_out = out.empty() ? reinterpret_cast<Bytef *>(&dummy) : reinterpret_cast<Bytef *>(out.data());
  zs.avail_out = out.empty() ? 1 : static_cast<uInt>(out.size());
  const int rc = inflate(&zs, Z_FINISH);
  const auto produced = zs.total_out;
  inflateEnd(&zs);
  if(rc != Z_STREAM_END || produced != expected) {
    not_a_zip(fmt::format("entry '{}' does not inflate to its declared size", name));
  }
  return out;
}

class Cursor {
public:
  Cursor(std::string_view bytes, std::size_t at) : bytes_(bytes), at_(at) {}
  std::uint16_t u16() {
    need(2);
    const auto v = static_cast<std::uint16_t>(byte(0) | (byte(1) << 8));
    at_ += 2;
    return v;
  }
  std::uint32_t u32() {
    need(4);
    const auto v = static_cast<std::uint32_t>(byte(0) | (byte(1) << 8) | (byte(2) << 16)) |
                   (static_cast<std::uint32_t>(byte(3)) << 24);
    at_ += 4;
    return v;
  }
  std::string_view take(std::size_t n) {
    need(n);
    const auto s = bytes_.substr(at_, n);
    at_ += n;
    return s;
  }
  std::size_t at() const { return at_; }

private:
  unsigned byte(std::size_t i) const { return static_cast<unsigned char>(bytes_[at_ + i]); }
  void need(std::size_t n) const {
    if(at_ > bytes_.size() || bytes_.size() - at_ < n) {
      not_a_zip("truncated structure");
    }
  }
  std::string_view bytes_;
  std::size_t at_;
};

} // namespace

std::uint32_t crc32_of(std::string_view bytes) {
  return static_cast<std::uint32_t>(
      crc32(crc32(0L, Z_NULL, 0), reinterpret_cast<const Bytef *>(bytes.data()), static_cast<uInt>(bytes.size())));
}

DosDateTime dos_date_time(std::int64_t unixSeconds) {
  using namespace std::chrono;
  constexpr std::int64_t kMin = 315532800;  // 1980-01-01T00:00:00Z
  constexpr std::int64_t kMax = 4354819198; // 2107-12-31T23:59:58Z
  const auto t = std::clamp(unixSeconds, kMin, kMax);
  const sys_seconds tp{seconds{t}};
  const auto day = floor<days>(tp);
  const year_month_day ymd{day};
  const hh_mm_ss hms{tp - day};
  DosDateTime d;
  d.date = static_cast<std::uint16_t>(((static_cast<int>(ymd.year()) - 1980) << 9) |
                                      (static_cast<unsigned>(ymd.month()) << 5) | static_cast<unsigned>(ymd.day()));
  d.time = static_cast<std::uint16_t>((hms.hours().count() << 11) | (hms.minutes().count() << 5) |
                                      (hms.seconds().count() / 2));
  return d;
}

std::string write_zip(const std::vector<ZipInput> &entries, std::int64_t unixSeconds) {
  const auto stamp = dos_date_time(unixSeconds);
  std::string out;
  std::string central;
  for(const auto &e : entries) {
    const bool ascii = std::all_of(e.path.begin(), e.path.end(), [](char c) { return static_cast<unsigned char>(c) < 0x80; });
    const std::uint16_t flags = ascii ? 0 : kUtf8Flag;
    const std::uint16_t method = e.deflate ? 8 : 0;
    const auto crc = crc32_of(e.bytes);
    const std::string packed = e.deflate ? deflate_raw(e.bytes) : std::string(e.bytes);
    if(out.size() > std::numeric_limits<std::uint32_t>::max() || packed.size() > std::numeric_limits<std::uint32_t>::max() ||
       e.bytes.size() > std::numeric_limits<std::uint32_t>::max()) {
      throw Error(ErrorCode::Io, "container exceeds the 4 GiB limit of a ZIP archive without ZIP64");
    }
    const auto offset = static_cast<std::uint32_t>(out.size());

    put32(out, kLocalSig);
    put16(out, 20);
    put16(out, flags);
    put16(out, method);
    put16(out, stamp.time);
    put16(out, stamp.date);
    put32(out, crc);
    put32(out, static_cast<std::uint32_t>(packed.size()));
    put32(out, static_cast<std::uint32_t>(e.bytes.size()));
    put16(out, static_cast<std::uint16_t>(e.path.size()));
    put16(out, 0);
    out += e.path;
    out += packed;

    put32(central, kCentralSig);
    put16(central, 20); // made by: MS-DOS, spec 2.0
    put16(central, 20);
    put16(central, flags);
    put16(central, method);
    put16(central, stamp.time);
    put16(central, stamp.date);
    put32(central, crc);
    put32(central, static_cast<std::uint32_t>(packed.size()));
    put32(central, static_cast<std::uint32_t>(e.bytes.size()));
    put16(central, static_cast<std::uint16_t>(e.path.size()));
    put16(central, 0);
    put16(central, 0);
    put16(central, 0);
    put16(central, 0);
    put32(central, 0);
    put32(central, offset);
    central += e.path;
  }
  if(entries.size() > 0xFFFF) {
    throw Error(ErrorCode::Io, "too many entries for a ZIP archive without ZIP64");
  }
  const auto cdOffset = static_cast<std::uint32_t>(out.size());
  out += central;
  put32(out, kEndSig);
  put16(out, 0);
  put16(out, 0);
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put16(out, static_cast<std::uint16_t>(entries.size()));
  put32(out, static_cast<std::uint32_t>(central.size()));
  put32(out, cdOffset);
  put16(out, 0);
  return out;
}

std::vector<ZipEntry> read_zip(std::string_view bytes) {
  if(bytes.size() < 22) {
    not_a_zip("too short");
  }
  // The end record sits in the last 22 + 65535 bytes.
  std::size_t eocd = std::string_view::npos;
  const std::size_t floor = bytes.size() > 22 + 0xFFFF ? bytes.size() - 22 - 0xFFFF : 0;
  for(std::size_t i = bytes.size() - 22 + 1; i-- > floor;) {
    if(Cursor(bytes, i).u32() == kEndSig) {
      eocd = i;
      break;
    }
  }
  if(eocd == std::string_view::npos) {
    not_a_zip("no end of central directory record");
  }
  Cursor end(bytes, eocd + 4);
  const auto disk = end.u16();
  const auto cdDisk = end.u16();
  end.u16();
  const auto count = end.u16();
  const auto cdSize = end.u32();
  const auto cdOffset = end.u32();
  if(disk != 0 || cdDisk != 0) {
    not_a_zip("multi-disk archives are not supported");
  }
  if(static_cast<std::uint64_t>(cdOffset) + cdSize > eocd) {
    not_a_zip("central directory lies outside the archive");
  }

  std::vector<ZipEntry> entries;
  Cursor cd(bytes, cdOffset);
  for(std::size_t i = 0; i < count; ++i) {
    if(cd.u32() != kCentralSig) {
      not_a_zip(fmt::format("bad central directory header {}", i));
    }
    ZipEntry e;
    cd.u16();
    cd.u16();
    e.flags = cd.u16();
    e.method = cd.u16();
    e.modified.time = cd.u16();
    e.modified.date = cd.u16();
    e.crc = cd.u32();
    e.compressedSize = cd.u32();
    e.size = cd.u32();
    const auto nameLen = cd.u16();
    const auto extraLen = cd.u16();
    const auto commentLen = cd.u16();
    cd.u16();
    cd.u16();
    cd.u32();
    e.localOffset = cd.u32();
    e.path = std::string(cd.take(nameLen));
    cd.take(extraLen);
    cd.take(commentLen);
    if(e.flags & 0x0001) {
      not_a_zip(fmt::format("entry '{}' is encrypted", e.path));
    }
    entries.push_back(std::move(e));
  }

  for(auto &e : entries) {
    Cursor local(bytes, static_cast<std::size_t>(e.localOffset));
    if(local.u32() != kLocalSig) {
      not_a_zip(fmt::format("bad local header for '{}'", e.path));
    }
    local.u16();
    local.u16();
    const auto method = local.u16();
    local.u16();
    local.u16();
    local.u32();
    local.u32();
    local.u32();
    const auto nameLen = local.u16();
    e.localExtraLength = local.u16();
    const auto name = local.take(nameLen);
    if(name != e.path || method != e.method) {
      not_a_zip(fmt::format("local header of '{}' disagrees with the central directory", e.path));
    }
    local.take(e.localExtraLength);
    const auto packed = local.take(static_cast<std::size_t>(e.compressedSize));
    if(e.method == 0) {
      if(e.compressedSize != e.size) {
        not_a_zip(fmt::format("stored entry '{}' has mismatched sizes", e.path));
      }
      e.data = std::string(packed);
    } else if(e.method == 8) {
      e.data = inflate_raw(packed, e.size, e.path);
    } else {
      not_a_zip(fmt::format("entry '{}' uses unsupported method {}", e.path, e.method));
    }
    if(crc32_of(e.data) != e.crc) {
      not_a_zip(fmt::format("CRC mismatch in '{}'", e.path));
    }
  }
  std::sort(entries.begin(), entries.end(), [](const auto &a, const auto &b) { return a.localOffset < b.localOffset; });
  return entries;
}

} // namespace exbook::package

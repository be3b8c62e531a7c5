#include <exbook/error.hpp>
#include <exbook/model/variants.hpp>
#include <exbook/package/zip.hpp>

#include "test_support.hpp"

#include <doctest.h>

#include <ctime>

using namespace exbook;
using namespace exbook::package;

namespace {

std::string random_bytes(model::SeededRng &rng, std::size_t n, bool text) {
  std::string s(n, '\0');
  for(auto &c : s) {
    c = text ? static_cast<char>('a' + rng.below(6)) : static_cast<char>(rng.below(256));
  }
  return s;
}

std::uint32_t le32(std::string_view s, std::size_t at) {
  return static_cast<std::uint32_t>(static_cast<unsigned char>(s[at])) |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + 1])) << 8 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + 2])) << 16 |
         static_cast<std::uint32_t>(static_cast<unsigned char>(s[at + 3])) << 24;
}

std::uint16_t le16(std::string_view s, std::size_t at) {
  return static_cast<std::uint16_t>(static_cast<unsigned char>(s[at]) | static_cast<unsigned char>(s[at + 1]) << 8);
}

} // namespace

TEST_CASE("crc32 agrees with a bitwise reference") {
  CHECK(crc32_of("") == 0);
  CHECK(crc32_of("123456789") == 0xCBF43926u);
  model::SeededRng rng(9);
  for(int i = 0; i < 200; ++i) {
    const auto s = random_bytes(rng, rng.below(3000), false);
    CHECK(crc32_of(s) == test::reference_crc32(s));
  }
}

TEST_CASE("dos timestamps") {
  model::SeededRng rng(3);
  for(int i = 0; i < 300; ++i) {
    const auto t = static_cast<std::int64_t>(315532800 + rng.below(4354819198 - 315532800));
    const std::time_t tt = t;
    std::tm tm{};
    gmtime_r(&tt, &tm);
    const auto d = dos_date_time(t);
    CHECK((d.date >> 9) == tm.tm_year + 1900 - 1980);
    CHECK(((d.date >> 5) & 0xF) == tm.tm_mon + 1);
    CHECK((d.date & 0x1F) == tm.tm_mday);
    CHECK((d.time >> 11) == tm.tm_hour);
    CHECK(((d.time >> 5) & 0x3F) == tm.tm_min);
    CHECK((d.time & 0x1F) == tm.tm_sec / 2);
  }
  const auto epoch = dos_date_time(0);
  CHECK(epoch.date == ((0 << 9) | (1 << 5) | 1));
  CHECK(epoch.time == 0);
  const auto far = dos_date_time(std::int64_t{1} << 40);
  CHECK((far.date >> 9) == 127);
  CHECK(((far.date >> 5) & 0xF) == 12);
  CHECK((far.date & 0x1F) == 31);
}

TEST_CASE("archives read back through Python's zipfile") {
  model::SeededRng rng(11);
  for(int round = 0; round < 5; ++round) {
    std::vector<std::string> names{"mimetype"};
    std::vector<std::string> data{"application/epub+zip"};
    const auto n = 1 + rng.below(8);
    for(std::size_t i = 0; i < n; ++i) {
      names.push_back("OEBPS/f" + std::to_string(i) + (i % 3 == 0 ? "-été.txt" : ".bin"));
      data.push_back(random_bytes(rng, rng.below(5000), i % 2 == 0));
    }
    std::vector<ZipInput> in;
    for(std::size_t i = 0; i < names.size(); ++i) {
      in.push_back({names[i], data[i], i != 0});
    }
    const auto zip = write_zip(in, 1394496000);
    const auto py = test::python_zip_entries(zip);
    REQUIRE(py.size() == names.size());
    for(std::size_t i = 0; i < names.size(); ++i) {
      CHECK(py[i].name == names[i]);
      CHECK(py[i].data == data[i]);
      CHECK(py[i].compressType == (i == 0 ? 0 : 8));
      CHECK(py[i].crc == test::reference_crc32(data[i]));
    }
    const auto ours = read_zip(zip);
    REQUIRE(ours.size() == names.size());
    for(std::size_t i = 0; i < names.size(); ++i) {
      CHECK(ours[i].path == names[i]);
      CHECK(ours[i].data == data[i]);
      CHECK(ours[i].localExtraLength == 0);
    }
    CHECK(write_zip(in, 1394496000) == zip);
  }
}

TEST_CASE("the first local header is the stored mimetype") {
  const auto zip = write_zip({{"mimetype", "application/epub+zip", false}, {"a", "b", true}}, 0);
  CHECK(le32(zip, 0) == 0x04034b50u);
  CHECK(le16(zip, 8) == 0);    // method
  CHECK(le32(zip, 18) == 20);  // compressed size
  CHECK(le32(zip, 22) == 20);  // size
  CHECK(le16(zip, 26) == 8);   // name length
  CHECK(le16(zip, 28) == 0);   // extra length
  CHECK(zip.substr(30, 8) == "mimetype");
  CHECK(zip.substr(38, 20) == "application/epub+zip");
}

TEST_CASE("damaged archives are rejected") {
  CHECK_THROWS_AS(read_zip("hello"), Error);
  auto zip = write_zip({{"a.txt", "some content here", false}}, 0);
  const auto at = zip.find("some content");
  zip[at] = 'S';
  try {
    read_zip(zip);
    FAIL("accepted");
  } catch(const Error &e) {
    CHECK(e.code() == ErrorCode::NotAZip);
  }
}

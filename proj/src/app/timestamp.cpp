#include <exbook/app/timestamp.hpp>

#include <chrono>
#include <cstdlib>
#include <regex>
#include <stdexcept>
#include <string>

namespace exbook::app {

namespace {

int to_int(const std::string &s) { return std::stoi(s); }

} // namespace

std::int64_t parse_timestamp(std::string_view text) {
  const std::string s(text);
  static const std::regex digits(R"(-?[0-9]{1,12})");
  if(std::regex_match(s, digits)) {
    return std::stoll(s);
  }
  static const std::regex iso(
      R"(([0-9]{4})-([0-9]{2})-([0-9]{2})(?:T([0-9]{2}):([0-9]{2}):([0-9]{2})(Z|([+-])([0-9]{2}):([0-9]{2})))?)");
  std::smatch m;
  if(!std::regex_match(s, m, iso)) {
    throw std::invalid_argument("timestamp must be Unix seconds or ISO 8601 (YYYY-MM-DD[THH:MM:SSZ]): " + s);
  }
  using namespace std::chrono;
  const year_month_day ymd{year{to_int(m[1])}, month{static_cast<unsigned>(to_int(m[2]))},
                           day{static_cast<unsigned>(to_int(m[3]))}};
  if(!ymd.ok()) {
    throw std::invalid_argument("no such date: " + s);
  }
  std::int64_t result = sys_days{ymd}.time_since_epoch().count() * 86400LL;
  if(m[4].matched) {
    const int h = to_int(m[4]);
    const int mi = to_int(m[5]);
    const int sec = to_int(m[6]);
    if(h > 23 || mi > 59 || sec > 59) {
      throw std::invalid_argument("time of day out of range: " + s);
    }
    result += h * 3600 + mi * 60 + sec;
    if(m[8].matched) {
      const int offset = to_int(m[9]) * 3600 + to_int(m[10]) * 60;
      result -= m[8] == "+" ? offset : -offset;
    }
  }
  return result;
}

std::int64_t resolve_timestamp(const std::optional<std::string_view> &flag) {
  if(flag) {
    return parse_timestamp(*flag);
  }
  if(const char *env = std::getenv(std::string(kTimestampEnv).c_str()); env && *env) {
    return parse_timestamp(env);
  }
  return 0;
}

} // namespace exbook::app

#include <exbook/emit/stylesheet.hpp>
#include <exbook/model/types.hpp>

#include <doctest.h>

#include <algorithm>

using namespace exbook;

namespace {

ingest::CourseManifest course(ingest::Layout layout) {
  ingest::CourseManifest m;
  m.title = "T";
  m.language = "fr";
  m.layout = layout;
  return m;
}

std::size_t count(const std::string &s, char c) { return static_cast<std::size_t>(std::count(s.begin(), s.end(), c)); }

} // namespace

TEST_CASE("fixed courses get a page box of the viewport") {
  const auto css = emit::emit_stylesheet(course(ingest::Layout::Fixed));
  CHECK(css.find("size: 1024px 768px") != std::string::npos);
  CHECK(css.find("width: 1024px; height: 768px") != std::string::npos);
  auto mixed = course(ingest::Layout::Mixed);
  mixed.viewport = {600, 800};
  CHECK(emit::emit_stylesheet(mixed).find("size: 600px 800px") != std::string::npos);
}

TEST_CASE("reflowable courses have no page box") {
  const auto css = emit::emit_stylesheet(course(ingest::Layout::Reflowable));
  CHECK(css.find("@page") == std::string::npos);
  CHECK(css.find("px; height:") == std::string::npos);
}

TEST_CASE("every kind has a hook and braces balance") {
  const auto css = emit::emit_stylesheet(course(ingest::Layout::Fixed));
  for(const auto kind : model::kAllKinds) {
    CHECK(css.find(".exbook-exercise." + std::string(model::kind_name(kind)) + " ") != std::string::npos);
  }
  CHECK(count(css, '{') == count(css, '}'));
}

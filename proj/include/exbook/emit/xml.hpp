#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace exbook::emit {

using Attributes = std::vector<std::pair<std::string, std::string>>;

std::string escape_text(std::string_view s);
std::string escape_attribute(std::string_view s);

/// Percent-encodes everything but unreserved characters, '/' and '#'.
std::string encode_href(std::string_view path);
std::string decode_href(std::string_view href);

// Indenting writer for the documents the compiler generates. Text-only
// elements stay on one line; `raw` splices pre-serialized markup.
class XmlWriter {
public:
  XmlWriter();

  XmlWriter &open(std::string_view name, const Attributes &attrs = {});
  XmlWriter &close();
  XmlWriter &leaf(std::string_view name, const Attributes &attrs, std::string_view text);
  XmlWriter &empty(std::string_view name, const Attributes &attrs = {});
  XmlWriter &raw(std::string_view markup);
  XmlWriter &line(std::string_view literal);

  std::string str() const;

private:
  void indent();
  static void attributes(std::string &out, const Attributes &attrs);

  std::string out_;
  std::vector<std::string> stack_;
};

} // namespace exbook::emit

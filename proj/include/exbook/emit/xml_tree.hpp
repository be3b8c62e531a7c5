#pragma once

#include <exbook/emit/xml.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace exbook::emit {

// Minimal DOM built with expat, without namespace processing: prefixed
// names stay as written ("dc:title").
struct XmlNode {
  bool isText = false;
  std::string name; // element name, empty for text
  std::string text; // character data of a text node
  Attributes attrs;
  std::vector<XmlNode> children;
  std::size_t line = 0;

  const std::string *attr(std::string_view key) const;
  const XmlNode *child(std::string_view name) const;
  std::vector<const XmlNode *> children_named(std::string_view name) const;
  std::string inner_text() const;

  /// Calls f on this node and every descendant element, in document order.
  template <class F> void walk(F &&f) const {
    if(isText) {
      return;
    }
    f(*this);
    for(const auto &c : children) {
      c.walk(f);
    }
  }
};

/// Throws Error(SyntaxError) with line/column when the bytes are not
/// well-formed. The root element is returned.
XmlNode parse_xml(std::string_view bytes);

/// Serializes an element (or text node) compactly, without declaration.
std::string serialize(const XmlNode &node);

} // namespace exbook::emit

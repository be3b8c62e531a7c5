#include <exbook/emit/xml_tree.hpp>
#include <exbook/error.hpp>

#include <expat.h>
#include <fmt/format.h>

#include <memory>

namespace exbook::emit {

const std::string *XmlNode::attr(std::string_view key) const {
  for(const auto &[k, v] : attrs) {
    if(k == key) {
      return &v;
    }
  }
  return nullptr;
}

const XmlNode *XmlNode::child(std::string_view n) const {
  for(const auto &c : children) {
    if(!c.isText && c.name == n) {
      return &c;
    }
  }
  return nullptr;
}

std::vector<const XmlNode *> XmlNode::children_named(std::string_view n) const {
  std::vector<const XmlNode *> out;
  for(const auto &c : children) {
    if(!c.isText && c.name == n) {
      out.push_back(&c);
    }
  }
  return out;
}

std::string XmlNode::inner_text() const {
  if(isText) {
    return text;
  }
  std::string out;
  for(const auto &c : children) {
    out += c.inner_text();
  }
  return out;
}

namespace {

struct Builder {
  XML_Parser parser;
  std::vector<XmlNode> stack;
  std::optional<XmlNode> root;

  static void on_start(void *self, const XML_Char *name, const XML_Char **atts) {
    auto &b = *static_cast<Builder *>(self);
    XmlNode n;
    n.name = name;
    n.line = XML_GetCurrentLineNumber(b.parser);
    for(auto **a = atts; *a; a += 2) {
      n.attrs.emplace_back(a[0], a[1]);
    }
    b.stack.push_back(std::move(n));
  }

  static void on_end(void *self, const XML_Char *) {
    auto &b = *static_cast<Builder *>(self);
    auto n = std::move(b.stack.back());
    b.stack.pop_back();
    if(b.stack.empty()) {
      b.root = std::move(n);
    } else {
      b.stack.back().children.push_back(std::move(n));
    }
  }

  static void on_text(void *self, const XML_Char *s, int len) {
    auto &b = *static_cast<Builder *>(self);
    if(b.stack.empty()) {
      return;
    }
    auto &kids = b.stack.back().children;
    if(!kids.empty() && kids.back().isText) {
      kids.back().text.append(s, static_cast<std::size_t>(len));
      return;
    }
    XmlNode t;
    t.isText = true;
    t.text.assign(s, static_cast<std::size_t>(len));
    kids.push_back(std::move(t));
  }
};

} // namespace

XmlNode parse_xml(std::string_view bytes) {
  std::unique_ptr<std::remove_pointer_t<XML_Parser>, decltype(&XML_ParserFree)> parser(XML_ParserCreate("UTF-8"),
                                                                                        &XML_ParserFree);
  Builder b{parser.get(), {}, {}};
  XML_SetUserData(parser.get(), &b);
  XML_SetElementHandler(parser.get(), &Builder::on_start, &Builder::on_end);
  XML_SetCharacterDataHandler(parser.get(), &Builder::on_text);
  if(XML_Parse(parser.get(), bytes.data(), static_cast<int>(bytes.size()), XML_TRUE) == XML_STATUS_ERROR) {
    const SourceLocation where{XML_GetCurrentLineNumber(parser.get()),
                               XML_GetCurrentColumnNumber(parser.get()) + 1};
    throw Error(ErrorCode::SyntaxError,
                fmt::format("{}:{}: {}", where.line, where.column, XML_ErrorString(XML_GetErrorCode(parser.get()))),
                where);
  }
  if(!b.root) {
    throw Error(ErrorCode::SyntaxError, "no root element");
  }
  return std::move(*b.root);
}

std::string serialize(const XmlNode &node) {
  if(node.isText) {
    return escape_text(node.text);
  }
  std::string out = "<" + node.name;
  for(const auto &[k, v] : node.attrs) {
    out += fmt::format(" {}=\"{}\"", k, escape_attribute(v));
  }
  if(node.children.empty()) {
    return out + "/>";
  }
  out += '>';
  for(const auto &c : node.children) {
    out += serialize(c);
  }
  return out + "</" + node.name + ">";
}

} // namespace exbook::emit

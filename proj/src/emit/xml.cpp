#include <exbook/emit/xml.hpp>

#include <fmt/format.h>

#include <cctype>
#include <stdexcept>

namespace exbook::emit {

namespace {

std::string escape(std::string_view s, bool attribute) {
  std::string out;
  out.reserve(s.size());
  for(const char c : s) {
    switch(c) {
    case '&': out += "&amp;"; break;
    case '<': out += "&lt;"; break;
    case '>': out += "&gt;"; break;
    case '"':
      out += attribute ? "&quot;" : "\"";
      break;
    case '\n':
      out += attribute ? "&#10;" : "\n";
      break;
    case '\t':
      out += attribute ? "&#9;" : "\t";
      break;
    case '\r': out += "&#13;"; break;
    default:
      // control characters are not allowed in XML 1.0
      if(static_cast<unsigned char>(c) < 0x20) {
        out += "\xEF\xBF\xBD";
      } else {
        out += c;
      }
    }
  }
  return out;
}

} // namespace

std::string escape_text(std::string_view s) { return escape(s, false); }
std::string escape_attribute(std::string_view s) { return escape(s, true); }

std::string encode_href(std::string_view path) {
  std::string out;
  for(const char c : path) {
    const auto u = static_cast<unsigned char>(c);
    if(std::isalnum(u) || c == '-' || c == '_' || c == '.' || c == '~' || c == '/' || c == '#') {
      out += c;
    } else {
      out += fmt::format("%{:02X}", u);
    }
  }
  return out;
}

std::string decode_href(std::string_view href) {
  std::string out;
  for(std::size_t i = 0; i < href.size(); ++i) {
    if(href[i] == '%' && i + 2 < href.size() && std::isxdigit(static_cast<unsigned char>(href[i + 1])) &&
       std::isxdigit(static_cast<unsigned char>(href[i + 2]))) {
      out += static_cast<char>(std::stoi(std::string(href.substr(i + 1, 2)), nullptr, 16));
      i += 2;
    } else {
      out += href[i];
    }
  }
  return out;
}

XmlWriter::XmlWriter() { out_ = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"; }

void XmlWriter::indent() { out_.append(stack_.size() * 2, ' '); }

void XmlWriter::attributes(std::string &out, const Attributes &attrs) {
  for(const auto &[k, v] : attrs) {
    out += ' ';
    out += k;
    out += "=\"";
    out += escape_attribute(v);
    out += '"';
  }
}

XmlWriter &XmlWriter::open(std::string_view name, const Attributes &attrs) {
  indent();
  out_ += '<';
  out_ += name;
  attributes(out_, attrs);
  out_ += ">\n";
  stack_.emplace_back(name);
  return *this;
}

XmlWriter &XmlWriter::close() {
  if(stack_.empty()) {
    throw std::logic_error("XmlWriter::close without open element");
  }
  const auto name = std::move(stack_.back());
  stack_.pop_back();
  indent();
  out_ += "</" + name + ">\n";
  return *this;
}

XmlWriter &XmlWriter::leaf(std::string_view name, const Attributes &attrs, std::string_view text) {
  indent();
  out_ += '<';
  out_ += name;
  attributes(out_, attrs);
  out_ += '>';
  out_ += escape_text(text);
  out_ += "</";
  out_ += name;
  out_ += ">\n";
  return *this;
}

XmlWriter &XmlWriter::empty(std::string_view name, const Attributes &attrs) {
  indent();
  out_ += '<';
  out_ += name;
  attributes(out_, attrs);
  out_ += "/>\n";
  return *this;
}

XmlWriter &XmlWriter::raw(std::string_view markup) {
  out_ += markup;
  if(!markup.empty() && markup.back() != '\n') {
    out_ += '\n';
  }
  return *this;
}

XmlWriter &XmlWriter::line(std::string_view literal) {
  indent();
  out_ += literal;
  out_ += '\n';
  return *this;
}

std::string XmlWriter::str() const {
  if(!stack_.empty()) {
    throw std::logic_error("XmlWriter::str with unclosed <" + stack_.back() + ">");
  }
  return out_;
}

} // namespace exbook::emit

#include <exbook/error.hpp>
#include <exbook/ingest/legacy.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>

namespace exbook::ingest {

using namespace exbook::model;

namespace {

struct Node {
  enum class Type { String, Object, Bare } type = Type::String;
  std::string text; // string value or bare token
  std::vector<std::pair<std::string, Node>> members;
  std::vector<SourceLocation> keyLocations;
  SourceLocation where;
};

class Reader {
public:
  explicit Reader(std::string_view src) : src_(src) {}

  [[noreturn]] void fail(const std::string &message, std::size_t at) const {
    const auto loc = locate(src_, at);
    throw Error(ErrorCode::SyntaxError, fmt::format("{}:{}: {}", loc.line, loc.column, message), loc);
  }
  [[noreturn]] void fail(const std::string &message) const { fail(message, pos_); }

  SourceLocation here() const { return locate(src_, pos_); }
  SourceLocation location_of(std::size_t at) const { return locate(src_, at); }

  void skip_space() {
    for(;;) {
      while(pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        ++pos_;
      }
      if(src_.substr(pos_, 2) == "//") {
        while(pos_ < src_.size() && src_[pos_] != '\n') {
          ++pos_;
        }
      } else if(src_.substr(pos_, 2) == "/*") {
        const auto end = src_.find("*/", pos_ + 2);
        if(end == std::string_view::npos) {
          fail("unterminated comment");
        }
        pos_ = end + 2;
      } else {
        return;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= src_.size();
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  void expect(char c) {
    if(!peek(c)) {
      fail(pos_ < src_.size() ? fmt::format("expected '{}', found '{}'", c, src_[pos_])
                              : fmt::format("expected '{}' before end of input", c));
    }
    ++pos_;
  }

  static bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$'; }
  static bool ident_char(char c) { return ident_start(c) || std::isdigit(static_cast<unsigned char>(c)); }

  std::string identifier() {
    skip_space();
    if(pos_ >= src_.size() || !ident_start(src_[pos_])) {
      fail("expected an identifier");
    }
    const auto start = pos_;
    while(pos_ < src_.size() && ident_char(src_[pos_])) {
      ++pos_;
    }
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string quoted() {
    skip_space();
    const char quote = src_[pos_++];
    std::string out;
    while(true) {
      if(pos_ >= src_.size() || src_[pos_] == '\n') {
        fail("unterminated string");
      }
      const char c = src_[pos_++];
      if(c == quote) {
        return out;
      }
      if(c != '\\') {
        out += c;
        continue;
      }
      if(pos_ >= src_.size()) {
        fail("unterminated string");
      }
      const char e = src_[pos_++];
      switch(e) {
      case 'n': out += '\n'; break;
      case 't': out += '\t'; break;
      case 'r': out += '\r'; break;
      case 'u': {
        unsigned cp = 0;
        const auto hex = src_.substr(pos_, 4);
        if(hex.size() != 4 || std::from_chars(hex.data(), hex.data() + 4, cp, 16).ptr != hex.data() + 4) {
          fail("bad \\u escape");
        }
        pos_ += 4;
        append_utf8(out, cp);
        break;
      }
      default: out += e; break;
      }
    }
  }

  Node value() {
    skip_space();
    Node n;
    n.where = here();
    if(pos_ >= src_.size()) {
      fail("expected a value before end of input");
    }
    const char c = src_[pos_];
    if(c == '{') {
      n.type = Node::Type::Object;
      object_body(n);
    } else if(c == '"' || c == '\'') {
      n.text = quoted();
    } else if(ident_char(c) || c == '-' || c == '.') {
      n.type = Node::Type::Bare;
      const auto start = pos_;
      while(pos_ < src_.size() && (ident_char(src_[pos_]) || src_[pos_] == '.' || src_[pos_] == '-')) {
        ++pos_;
      }
      n.text = std::string(src_.substr(start, pos_ - start));
    } else {
      fail(fmt::format("unexpected '{}'", c));
    }
    return n;
  }

  std::size_t offset() const { return pos_; }

private:
  void object_body(Node &n) {
    expect('{');
    while(!peek('}')) {
      skip_space();
      const auto keyAt = here();
      std::string key;
      if(pos_ < src_.size() && (src_[pos_] == '"' || src_[pos_] == '\'')) {
        key = quoted();
      } else {
        key = identifier();
      }
      for(const auto &[existing, _] : n.members) {
        if(existing == key) {
          fail(fmt::format("duplicate key '{}'", key));
        }
      }
      expect(':');
      n.members.emplace_back(key, value());
      n.keyLocations.push_back(keyAt);
      if(!peek(',')) {
        break;
      }
      expect(',');
    }
    expect('}');
  }

  static void append_utf8(std::string &out, unsigned cp) {
    if(cp < 0x80) {
      out += static_cast<char>(cp);
    } else if(cp < 0x800) {
      out += static_cast<char>(0xC0 | (cp >> 6));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
      out += static_cast<char>(0xE0 | (cp >> 12));
      out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
      out += static_cast<char>(0x80 | (cp & 0x3F));
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

[[noreturn]] void fail_at(SourceLocation loc, const std::string &message) {
  throw Error(ErrorCode::SyntaxError, fmt::format("{}:{}: {}", loc.line, loc.column, message), loc);
}

const std::string &string_field(const Node &n, std::string_view name) {
  if(n.type != Node::Type::String) {
    fail_at(n.where, fmt::format("{} must be a quoted string", name));
  }
  return n.text;
}

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if(first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_semicolons(std::string_view s) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for(;;) {
    const auto cut = s.find(';', start);
    out.push_back(trim(s.substr(start, cut == std::string_view::npos ? std::string_view::npos : cut - start)));
    if(cut == std::string_view::npos) {
      return out;
    }
    start = cut + 1;
  }
}

std::optional<std::size_t> task_number(std::string_view key) {
  if(key.size() <= 4 || key.substr(0, 4) != "task") {
    return std::nullopt;
  }
  std::size_t n = 0;
  const auto digits = key.substr(4);
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if(ec != std::errc{} || ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return n;
}

MediaRef read_media(const Node &n) {
  if(n.type != Node::Type::Object) {
    fail_at(n.where, "multiMedia must be an object with type and file");
  }
  std::optional<MediaKind> kind;
  std::optional<std::string> file;
  for(std::size_t i = 0; i < n.members.size(); ++i) {
    const auto &[key, v] = n.members[i];
    if(key == "type") {
      const auto &t = string_field(v, "multiMedia.type");
      kind = media_kind_from_name(t);
      if(!kind) {
        fail_at(v.where, fmt::format("unknown media type \"{}\" (image, audio or video)", t));
      }
    } else if(key == "file") {
      file = string_field(v, "multiMedia.file");
    } else {
      fail_at(n.keyLocations[i], fmt::format("unknown multiMedia field '{}'", key));
    }
  }
  if(!kind || !file) {
    fail_at(n.where, "multiMedia needs both type and file");
  }
  return MediaRef{*kind, *file, std::nullopt};
}

struct ReadTask {
  task::MultipleChoice task;
  const char *missing = nullptr; // first required field that is absent
};

ReadTask read_task(const Node &n, const std::string &label) {
  if(n.type != Node::Type::Object) {
    fail_at(n.where, fmt::format("{} must be an object", label));
  }
  task::MultipleChoice t;
  bool haveQuestion = false, haveAnswers = false, haveCorrect = false;
  for(std::size_t i = 0; i < n.members.size(); ++i) {
    const auto &[key, v] = n.members[i];
    if(key == "question") {
      t.question = string_field(v, key);
      haveQuestion = true;
    } else if(key == "answers") {
      t.answers = split_semicolons(string_field(v, key));
      haveAnswers = true;
    } else if(key == "correctAnswers") {
      for(const auto &part : split_semicolons(string_field(v, key))) {
        std::size_t idx = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), idx);
        if(part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
          fail_at(v.where, fmt::format("correctAnswers entry \"{}\" is not an index", part));
        }
        if(!t.correctAnswers.insert(idx).second) {
          fail_at(v.where, fmt::format("correctAnswers lists {} twice", idx));
        }
      }
      haveCorrect = true;
    } else if(key == "multiSelect") {
      const auto &flag = string_field(v, key);
      if(flag == "true") {
        t.multiSelect = true;
      } else if(flag == "false") {
        t.multiSelect = false;
      } else {
        fail_at(v.where, fmt::format("multiSelect must be \"true\" or \"false\", found \"{}\"", flag));
      }
    } else if(key == "multiMedia") {
      t.media = read_media(v);
    } else {
      fail_at(n.keyLocations[i], fmt::format("unknown field '{}' in {}", key, label));
    }
  }
  const char *missing = !haveQuestion ? "question" : !haveAnswers ? "answers" : !haveCorrect ? "correctAnswers" : nullptr;
  return {std::move(t), missing};
}

ExerciseKind kind_from_variable(const std::string &var, std::size_t at, const Reader &r) {
  std::string stem = var;
  if(stem.size() > 5 && stem.compare(stem.size() - 5, 5, "Input") == 0) {
    stem.resize(stem.size() - 5);
  }
  std::transform(stem.begin(), stem.end(), stem.begin(), [](unsigned char c) { return std::tolower(c); });
  const auto kind = kind_from_name(stem);
  if(!kind) {
    r.fail(fmt::format("cannot tell the exercise kind from '{}'", var), at);
  }
  if(*kind != ExerciseKind::MultipleChoice) {
    throw Error(ErrorCode::UnsupportedLegacyKind,
                fmt::format("legacy records can only describe multiple choice exercises, not {}", kind_name(*kind)),
                r.location_of(at));
  }
  return *kind;
}

} // namespace

ParsedDocument parse_legacy_document(std::string_view bytes, const ParseOptions &options) {
  Reader r(bytes);
  r.skip_space();
  const auto start = r.offset();
  if(!r.peek('{')) {
    const auto keyword = r.identifier();
    if(keyword != "var" && keyword != "let" && keyword != "const") {
      r.fail(fmt::format("expected 'var' or an object literal, found '{}'", keyword), start);
    }
    r.skip_space();
    const auto varAt = r.offset();
    kind_from_variable(r.identifier(), varAt, r);
    r.expect('=');
  }
  const auto root = r.value();
  if(root.type != Node::Type::Object) {
    fail_at(root.where, "expected an object literal");
  }
  if(r.peek(';')) {
    r.expect(';');
  }
  if(!r.at_end()) {
    r.fail("unexpected text after the object literal");
  }

  ParsedDocument doc;
  for(std::size_t i = 0; i < root.members.size(); ++i) {
    const auto &[id, record] = root.members[i];
    if(record.type != Node::Type::Object) {
      fail_at(record.where, fmt::format("exercise '{}' must be an object of tasks", id));
    }
    std::map<std::size_t, task::MultipleChoice> numbered;
    std::set<std::size_t> seen;
    for(std::size_t k = 0; k < record.members.size(); ++k) {
      const auto &[key, taskNode] = record.members[k];
      const auto n = task_number(key);
      if(!n) {
        fail_at(record.keyLocations[k], fmt::format("expected a task key like task1, found '{}'", key));
      }
      if(!seen.insert(*n).second) {
        fail_at(record.keyLocations[k], fmt::format("task number {} appears twice in '{}'", *n, id));
      }
      auto read = read_task(taskNode, id + "." + key);
      if(read.missing) {
        // stub tasks (a question with nothing to answer) are skipped
        doc.warnings.warning("LegacyTaskIncomplete", id + "/" + key,
                             fmt::format("{} has no {} and was skipped", key, read.missing));
        continue;
      }
      numbered.emplace(*n, std::move(read.task));
    }
    if(numbered.empty()) {
      fail_at(record.where, fmt::format("exercise '{}' has no complete task", id));
    }
    ExerciseDefinition def;
    def.id = id;
    def.kind = ExerciseKind::MultipleChoice;
    for(auto &[_, t] : numbered) {
      def.tasks.emplace_back(std::move(t));
    }
    if(!options.zeroBasedConfirmed) {
      doc.warnings.warning("LegacyIndexBase", id,
                           "correctAnswers were read as 0-based indices; confirm the base in the course manifest");
    }
    doc.order.push_back(id);
    doc.definitions.emplace(id, std::move(def));
  }
  return doc;
}

} // namespace exbook::ingest

#include <exbook/model/grade.hpp>
#include <exbook/model/normalize.hpp>
#include <exbook/model/validate.hpp>

#include <fmt/format.h>

#include <cmath>
#include <map>

namespace exbook::model {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

bool is_ascii_alnum(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

class Checker {
public:
  explicit Checker(Report &report) : report_(report) {}

  void media(const MediaRef &m, const std::string &path) {
    if(!is_valid_basename(m.basename)) {
      report_.error("InvalidBasename", path + "/file",
                    fmt::format("media file '{}' must be a bare name without extension or directory", m.basename));
    }
    if(m.license && m.license->licenseName.empty()) {
      report_.error("EmptyField", path + "/license/license", "license name must not be empty");
    }
  }

  void media_of_kind(const MediaRef &m, MediaKind expected, const std::string &path) {
    media(m, path);
    if(m.kind != expected) {
      report_.error("MediaKindMismatch", path,
                    fmt::format("expected {} media, got {}", media_kind_name(expected), media_kind_name(m.kind)));
    }
  }

  void item(const Item &it, const std::string &path) {
    if(const auto *s = std::get_if<std::string>(&it)) {
      non_empty(*s, path);
    } else {
      media(std::get<MediaRef>(it), path);
    }
  }

  void non_empty(const std::string &s, const std::string &path) {
    if(s.empty()) {
      report_.error("EmptyField", path, "must not be empty");
    }
  }

  void indices(const std::set<std::size_t> &idx, std::size_t bound, const std::string &path) {
    if(idx.empty()) {
      report_.error("EmptyField", path, "at least one index is required");
    }
    std::size_t position = 0;
    for(auto i : idx) {
      if(i >= bound) {
        report_.error("IndexOutOfRange", fmt::format("{}[{}]", path, position),
                      fmt::format("index out of range: {} not below {}", i, bound));
      }
      ++position;
    }
  }

  void operator()(const task::PairAssignment &t, const std::string &p) {
    if(t.pairs.empty()) {
      report_.error("EmptyField", p + "/pairs", "at least one pair is required");
    }
    for(std::size_t i = 0; i < t.pairs.size(); ++i) {
      item(t.pairs[i].left, fmt::format("{}/pairs[{}]/left", p, i));
      item(t.pairs[i].right, fmt::format("{}/pairs[{}]/right", p, i));
    }
    if(!t.rightOrder.empty()) {
      permutation(t.rightOrder, t.pairs.size(), p + "/rightOrder");
    }
  }

  void operator()(const task::GroupAssignment &t, const std::string &p) {
    if(t.groups.empty()) {
      report_.error("EmptyField", p + "/groups", "at least one group is required");
    }
    std::size_t members = 0;
    for(std::size_t g = 0; g < t.groups.size(); ++g) {
      const auto gp = fmt::format("{}/groups[{}]", p, g);
      non_empty(t.groups[g].label, gp + "/label");
      for(std::size_t m = 0; m < t.groups[g].members.size(); ++m) {
        item(t.groups[g].members[m], fmt::format("{}/members[{}]", gp, m));
      }
      members += t.groups[g].members.size();
    }
    if(!t.groups.empty() && members == 0) {
      report_.error("EmptyField", p + "/groups", "groups contain no members");
    }
  }

  void operator()(const task::OrderAssignment &t, const std::string &p) {
    if(t.items.empty()) {
      report_.error("EmptyField", p + "/items", "at least one item is required");
    }
    for(std::size_t i = 0; i < t.items.size(); ++i) {
      item(t.items[i], fmt::format("{}/items[{}]", p, i));
    }
  }

  void operator()(const task::DragDropImage &t, const std::string &p) {
    media_of_kind(t.background, MediaKind::Image, p + "/background");
    if(t.draggables.empty()) {
      report_.error("EmptyField", p + "/draggables", "at least one draggable is required");
    }
    for(std::size_t i = 0; i < t.draggables.size(); ++i) {
      const auto dp = fmt::format("{}/draggables[{}]", p, i);
      non_empty(t.draggables[i].label, dp + "/label");
      const auto &r = t.draggables[i].zone;
      const bool finite = std::isfinite(r.x) && std::isfinite(r.y) && std::isfinite(r.width) && std::isfinite(r.height);
      if(!finite || r.x < 0 || r.y < 0 || r.width <= 0 || r.height <= 0 || r.x + r.width > 1 ||
         r.y + r.height > 1) {
        report_.error("ZoneOutOfBounds", dp + "/zone", "zone must have positive size and lie within the unit square");
      } else if(!reachable_drop_point(t, i)) {
        report_.error("UnreachableZone", dp + "/zone",
                      "zone is covered by earlier zones, so no drop can land in it first");
      }
    }
  }

  void gap(const task::Gap &g, const std::string &p) {
    if(g.accepted.empty()) {
      report_.error("EmptyField", p + "/accepted", "a gap needs at least one accepted answer");
    }
    for(std::size_t i = 0; i < g.accepted.size(); ++i) {
      non_empty(g.accepted[i], fmt::format("{}/accepted[{}]", p, i));
    }
  }

  void operator()(const task::Cloze &t, const std::string &p) {
    std::size_t gaps = 0;
    for(std::size_t i = 0; i < t.segments.size(); ++i) {
      if(const auto *g = std::get_if<task::Gap>(&t.segments[i])) {
        gap(*g, fmt::format("{}/segments[{}]", p, i));
        ++gaps;
      }
    }
    if(gaps == 0) {
      report_.error("EmptyField", p + "/segments", "a cloze needs at least one gap");
    }
  }

  void operator()(const task::Dictation &t, const std::string &p) {
    media_of_kind(t.audio, MediaKind::Audio, p + "/audio");
    non_empty(t.sampleSolution, p + "/sampleSolution");
  }

  void operator()(const task::MultipleChoice &t, const std::string &p) {
    non_empty(t.question, p + "/question");
    if(t.answers.empty()) {
      report_.error("EmptyField", p + "/answers", "at least one answer is required");
    }
    for(std::size_t i = 0; i < t.answers.size(); ++i) {
      non_empty(t.answers[i], fmt::format("{}/answers[{}]", p, i));
    }
    indices(t.correctAnswers, t.answers.size(), p + "/correctAnswers");
    if(!t.multiSelect && t.correctAnswers.size() > 1) {
      report_.error("SingleSelectArity", p + "/correctAnswers",
                    fmt::format("single-select question has {} correct answers", t.correctAnswers.size()));
    }
    if(t.media) {
      media(*t.media, p + "/media");
    }
  }

  void operator()(const task::TextQuiz &t, const std::string &p) {
    non_empty(t.question, p + "/question");
    if(t.accepted.empty()) {
      report_.error("EmptyField", p + "/accepted", "at least one accepted answer is required");
    }
    for(std::size_t i = 0; i < t.accepted.size(); ++i) {
      non_empty(t.accepted[i], fmt::format("{}/accepted[{}]", p, i));
    }
  }

  void operator()(const task::Crossword &t, const std::string &p) {
    // Letters by position; a position listed twice with different letters is a conflict.
    std::map<task::GridPos, std::vector<std::string>> letters;
    for(std::size_t i = 0; i < t.cells.size(); ++i) {
      const auto &c = t.cells[i];
      const auto cp = fmt::format("{}/cells[{}]", p, i);
      if(c.row < 0 || c.col < 0) {
        report_.error("CellOutOfBounds", cp, "cell coordinates must be non-negative");
      }
      if(composed_length(c.letter) != 1) {
        report_.error("InvalidLetter", cp + "/letter", fmt::format("'{}' is not a single letter", c.letter));
      }
      letters[{c.row, c.col}].push_back(c.letter);
    }
    if(t.entries.empty()) {
      report_.error("EmptyField", p + "/entries", "a crossword needs at least one entry");
    }

    std::map<task::GridPos, std::vector<std::size_t>> covering;
    for(std::size_t e = 0; e < t.entries.size(); ++e) {
      const auto &en = t.entries[e];
      const auto ep = fmt::format("{}/entries[{}]", p, e);
      non_empty(en.clue, ep + "/clue");
      if(en.length < 1 || en.startRow < 0 || en.startCol < 0) {
        report_.error("InvalidEntry", ep, "entry needs a non-negative start and a positive length");
        continue;
      }
      for(int k = 0; k < en.length; ++k) {
        const task::GridPos pos = en.direction == task::Direction::Across
                                      ? task::GridPos{en.startRow, en.startCol + k}
                                      : task::GridPos{en.startRow + k, en.startCol};
        covering[pos].push_back(e);
        if(!letters.contains(pos)) {
          report_.error("MissingLetter", fmt::format("{}/cells({},{})", p, pos.row, pos.col),
                        fmt::format("entry {} has no letter at ({},{})", e, pos.row, pos.col));
        }
      }
    }

    for(const auto &[pos, ls] : letters) {
      bool conflict = false;
      for(const auto &l : ls) {
        conflict = conflict || l != ls.front();
      }
      const auto where = fmt::format("{}/cells({},{})", p, pos.row, pos.col);
      if(conflict) {
        const auto it = covering.find(pos);
        if(it != covering.end() && it->second.size() > 1) {
          report_.error("CrosswordConflict", where,
                        fmt::format("entries {} and {} disagree at ({},{})", it->second[0], it->second[1], pos.row,
                                    pos.col));
        } else {
          report_.error("CrosswordConflict", where,
                        fmt::format("conflicting letters at ({},{})", pos.row, pos.col));
        }
      } else if(ls.size() > 1) {
        report_.warning("DuplicateCell", where, "cell listed more than once");
      }
      if(!covering.contains(pos)) {
        report_.warning("OrphanCell", where, "cell is not part of any entry");
      }
    }

    if(t.solutionCells.empty()) {
      report_.error("EmptyField", p + "/solutionCells", "the solution word needs at least one cell");
    }
    for(std::size_t i = 0; i < t.solutionCells.size(); ++i) {
      const auto &pos = t.solutionCells[i];
      if(!letters.contains(pos) || !covering.contains(pos)) {
        report_.error("SolutionCellUnresolved", fmt::format("{}/solutionCells[{}]", p, i),
                      fmt::format("solution cell ({},{}) holds no entry letter", pos.row, pos.col));
      }
    }
  }

  void operator()(const task::DropDownList &t, const std::string &p) {
    std::size_t gaps = 0;
    for(std::size_t i = 0; i < t.segments.size(); ++i) {
      const auto *c = std::get_if<task::Choice>(&t.segments[i]);
      if(!c) {
        continue;
      }
      ++gaps;
      const auto cp = fmt::format("{}/segments[{}]", p, i);
      if(c->options.empty()) {
        report_.error("EmptyField", cp + "/options", "a drop-down gap needs at least one option");
      } else if(c->correctIndex >= c->options.size()) {
        report_.error("IndexOutOfRange", cp + "/correctIndex",
                      fmt::format("index out of range: {} not below {}", c->correctIndex, c->options.size()));
      }
      std::set<std::string> seen;
      for(std::size_t o = 0; o < c->options.size(); ++o) {
        non_empty(c->options[o], fmt::format("{}/options[{}]", cp, o));
        if(!seen.insert(c->options[o]).second) {
          report_.error("DuplicateOption", fmt::format("{}/options[{}]", cp, o),
                        fmt::format("option '{}' appears twice", c->options[o]));
        }
      }
    }
    if(gaps == 0) {
      report_.error("EmptyField", p + "/segments", "a drop-down list needs at least one gap");
    }
  }

  void operator()(const task::Memory &t, const std::string &p) {
    const auto n = t.cards.size();
    if(n < 2 || n % 2 != 0) {
      report_.error("OddCardCount", p + "/cards", fmt::format("memory needs an even number of cards, got {}", n));
    }
    for(std::size_t i = 0; i < n; ++i) {
      item(t.cards[i], fmt::format("{}/cards[{}]", p, i));
    }
    if(t.pairing.size() != n) {
      report_.error("InvalidPairing", p + "/pairing", "pairing must list one partner per card");
      return;
    }
    for(std::size_t i = 0; i < n; ++i) {
      const auto j = t.pairing[i];
      const auto pp = fmt::format("{}/pairing[{}]", p, i);
      if(j >= n) {
        report_.error("IndexOutOfRange", pp, fmt::format("index out of range: {} not below {}", j, n));
      } else if(j == i) {
        report_.error("InvalidPairing", pp, "a card cannot be its own partner");
      } else if(t.pairing[j] != i) {
        report_.error("InvalidPairing", pp, fmt::format("card {} pairs with {} but {} pairs with {}", i, j, j, t.pairing[j]));
      }
    }
  }

  void operator()(const task::TextSelection &t, const std::string &p) {
    if(t.tokens.empty()) {
      report_.error("EmptyField", p + "/tokens", "at least one token is required");
    }
    for(std::size_t i = 0; i < t.tokens.size(); ++i) {
      non_empty(t.tokens[i], fmt::format("{}/tokens[{}]", p, i));
    }
    indices(t.correctTokens, t.tokens.size(), p + "/correctTokens");
  }

  void operator()(const task::MediaOverlay &t, const std::string &p) {
    media_of_kind(t.audio, MediaKind::Audio, p + "/audio");
    if(t.clips.empty()) {
      report_.error("EmptyField", p + "/clips", "at least one clip is required");
    }
    std::set<std::string> ids;
    for(std::size_t i = 0; i < t.clips.size(); ++i) {
      const auto &c = t.clips[i];
      const auto cp = fmt::format("{}/clips[{}]", p, i);
      if(!is_fragment_id(c.textFragmentId)) {
        report_.error("InvalidFragmentId", cp + "/fragment", fmt::format("'{}' is not a valid fragment id", c.textFragmentId));
      } else if(!ids.insert(c.textFragmentId).second) {
        report_.error("DuplicateFragmentId", cp + "/fragment", fmt::format("fragment '{}' used twice", c.textFragmentId));
      }
      if(!std::isfinite(c.clipBegin) || !std::isfinite(c.clipEnd) || c.clipBegin < 0 || c.clipBegin >= c.clipEnd) {
        report_.error("InvalidClip", cp, "clip needs 0 <= begin < end");
      }
      if(i > 0 && c.clipBegin < t.clips[i - 1].clipEnd) {
        report_.error("OverlappingClip", cp, "clips must be in order and must not overlap");
      }
    }
  }

private:
  void permutation(const std::vector<std::size_t> &perm, std::size_t n, const std::string &path) {
    std::vector<bool> seen(n, false);
    bool ok = perm.size() == n;
    for(auto v : perm) {
      if(v >= n || seen[v]) {
        ok = false;
        break;
      }
      seen[v] = true;
    }
    if(!ok) {
      report_.error("InvalidPermutation", path, "display order must be a permutation of the pairs");
    }
  }

  Report &report_;
};

} // namespace

bool is_fragment_id(std::string_view id) {
  if(id.empty()) {
    return false;
  }
  const char first = id.front();
  if(!((first >= 'a' && first <= 'z') || (first >= 'A' && first <= 'Z') || first == '_')) {
    return false;
  }
  for(char c : id) {
    if(!is_ascii_alnum(c) && c != '_' && c != '-' && c != '.') {
      return false;
    }
  }
  return true;
}

bool is_language_tag(std::string_view tag) {
  if(tag.empty()) {
    return false;
  }
  std::size_t run = 0;
  for(char c : tag) {
    if(c == '-') {
      if(run == 0) {
        return false;
      }
      run = 0;
    } else if(is_ascii_alnum(c)) {
      if(++run > 8) {
        return false;
      }
    } else {
      return false;
    }
  }
  return run > 0;
}

bool is_valid_basename(std::string_view basename) {
  if(basename.empty()) {
    return false;
  }
  for(char c : basename) {
    if(c == '.' || c == '/' || c == '\\' || static_cast<unsigned char>(c) < 0x20) {
      return false;
    }
  }
  return true;
}

Report validate_task(const TaskSpec &task, std::string_view path) {
  Report report;
  Checker checker(report);
  const std::string p(path);
  std::visit([&](const auto &t) { checker(t, p); }, task);
  return report;
}

Report validate_definition(const ExerciseDefinition &def) {
  Report report;
  const auto &id = def.id;
  if(!is_fragment_id(id)) {
    report.error("InvalidId", id, fmt::format("'{}' is not a valid fragment identifier", id));
  }
  if(def.uiLanguage && !is_language_tag(*def.uiLanguage)) {
    report.error("InvalidLanguage", id + "/uiLanguage", fmt::format("'{}' is not a language tag", *def.uiLanguage));
  }
  if(def.tasks.empty()) {
    report.error("EmptyField", id + "/tasks", "an exercise needs at least one task");
  }
  for(std::size_t i = 0; i < def.tasks.size(); ++i) {
    const auto path = fmt::format("{}/tasks[{}]", id, i);
    if(kind_of(def.tasks[i]) != def.kind) {
      report.error("KindMismatch", path,
                   fmt::format("task is {} but the exercise is {}", kind_name(kind_of(def.tasks[i])), kind_name(def.kind)));
      continue;
    }
    report.append(validate_task(def.tasks[i], path));
  }
  return report;
}

} // namespace exbook::model

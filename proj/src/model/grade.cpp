#include <exbook/error.hpp>
#include <exbook/model/grade.hpp>
#include <exbook/model/normalize.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <map>

namespace exbook::model {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void shape(const std::string &what) {
  throw Error(ErrorCode::ShapeMismatch, what);
}

void expect_arity(std::size_t got, std::size_t want, std::string_view what) {
  if(got != want) {
    shape(fmt::format("{}: response has {} entries, task has {}", what, got, want));
  }
}

bool blank(const std::optional<std::string> &s) {
  return !s || s->find_first_not_of(" \t\r\n") == std::string::npos;
}

GradeResult fraction(std::vector<ItemVerdict> perItem) {
  const auto total = static_cast<std::int64_t>(perItem.size());
  const auto hits = static_cast<std::int64_t>(std::count(perItem.begin(), perItem.end(), ItemVerdict::Correct));
  GradeResult r;
  r.score = total == 0 ? Score(0, 1) : Score(hits, total);
  r.correct = total > 0 && r.score.is_one();
  r.perItem = std::move(perItem);
  return r;
}

// Shared by MultipleChoice and TextSelection.
GradeResult selection(const std::set<std::size_t> &key, const std::set<std::size_t> &selected, std::size_t n) {
  for(auto s : selected) {
    if(s >= n) {
      shape(fmt::format("selected index {} out of range", s));
    }
  }
  std::int64_t hits = 0;
  std::int64_t wrong = 0;
  std::vector<ItemVerdict> perItem(n, ItemVerdict::Unanswered);
  for(std::size_t i = 0; i < n; ++i) {
    const bool want = key.contains(i);
    const bool got = selected.contains(i);
    hits += (want && got) ? 1 : 0;
    wrong += (!want && got) ? 1 : 0;
    if(!selected.empty()) {
      perItem[i] = want == got ? ItemVerdict::Correct : ItemVerdict::Incorrect;
    }
  }
  GradeResult r;
  const auto den = static_cast<std::int64_t>(key.size());
  r.score = Score(std::max<std::int64_t>(0, hits - wrong), den);
  r.correct = r.score.is_one();
  r.perItem = std::move(perItem);
  return r;
}

ItemVerdict text_verdict(const std::optional<std::string> &typed, const std::vector<std::string> &accepted,
                         const NormalizationPolicy &policy) {
  if(blank(typed)) {
    return ItemVerdict::Unanswered;
  }
  return matches_any(*typed, accepted, policy) ? ItemVerdict::Correct : ItemVerdict::Incorrect;
}

ItemVerdict index_verdict(const std::optional<std::size_t> &got, std::size_t want) {
  if(!got) {
    return ItemVerdict::Unanswered;
  }
  return *got == want ? ItemVerdict::Correct : ItemVerdict::Incorrect;
}

const NormalizationPolicy kLetterPolicy{false, true, true};

struct Grader {
  GradeResult operator()(const task::PairAssignment &t, const response::PairAssignment &r) const {
    const auto n = t.pairs.size();
    expect_arity(r.slots.size(), n, "pairassignment");
    std::vector<bool> used(n, false);
    std::vector<ItemVerdict> perItem;
    for(std::size_t left = 0; left < n; ++left) {
      const auto &slot = r.slots[left];
      if(!slot) {
        perItem.push_back(ItemVerdict::Unanswered);
        continue;
      }
      if(*slot >= n || used[*slot]) {
        shape(fmt::format("pairassignment: slot {} invalid or used twice", *slot));
      }
      used[*slot] = true;
      const auto shown = t.rightOrder.empty() ? *slot : t.rightOrder[*slot];
      perItem.push_back(shown == left ? ItemVerdict::Correct : ItemVerdict::Incorrect);
    }
    return fraction(std::move(perItem));
  }

  GradeResult operator()(const task::GroupAssignment &t, const response::GroupAssignment &r) const {
    std::vector<std::size_t> owner;
    for(std::size_t g = 0; g < t.groups.size(); ++g) {
      owner.insert(owner.end(), t.groups[g].members.size(), g);
    }
    expect_arity(r.groups.size(), owner.size(), "groupassignment");
    std::vector<ItemVerdict> perItem;
    for(std::size_t i = 0; i < owner.size(); ++i) {
      if(r.groups[i] && *r.groups[i] >= t.groups.size()) {
        shape(fmt::format("groupassignment: group {} out of range", *r.groups[i]));
      }
      perItem.push_back(index_verdict(r.groups[i], owner[i]));
    }
    return fraction(std::move(perItem));
  }

  GradeResult operator()(const task::OrderAssignment &t, const response::OrderAssignment &r) const {
    const auto n = t.items.size();
    expect_arity(r.order.size(), n, "orderassignment");
    std::vector<bool> used(n, false);
    std::vector<ItemVerdict> perItem;
    for(std::size_t pos = 0; pos < n; ++pos) {
      const auto &placed = r.order[pos];
      if(!placed) {
        perItem.push_back(ItemVerdict::Unanswered);
        continue;
      }
      if(*placed >= n || used[*placed]) {
        shape(fmt::format("orderassignment: item {} invalid or placed twice", *placed));
      }
      used[*placed] = true;
      perItem.push_back(t.items[*placed] == t.items[pos] ? ItemVerdict::Correct : ItemVerdict::Incorrect);
    }
    return fraction(std::move(perItem));
  }

  GradeResult operator()(const task::DragDropImage &t, const response::DragDropImage &r) const {
    const auto n = t.draggables.size();
    expect_arity(r.drops.size(), n, "dragdropimage");
    std::vector<ItemVerdict> perItem;
    for(std::size_t i = 0; i < n; ++i) {
      const auto &drop = r.drops[i];
      if(!drop) {
        perItem.push_back(ItemVerdict::Unanswered);
        continue;
      }
      if(!std::isfinite(drop->x) || !std::isfinite(drop->y)) {
        shape("dragdropimage: drop point is not finite");
      }
      // Overlapping zones resolve to the zone listed first.
      const auto hit = std::find_if(t.draggables.begin(), t.draggables.end(),
                                    [&](const task::Draggable &d) { return d.zone.contains(drop->x, drop->y); });
      const bool ok = hit != t.draggables.end() && hit->zone == t.draggables[i].zone;
      perItem.push_back(ok ? ItemVerdict::Correct : ItemVerdict::Incorrect);
    }
    return fraction(std::move(perItem));
  }

  GradeResult operator()(const task::Cloze &t, const response::Cloze &r) const {
    std::vector<const task::Gap *> gaps;
    for(const auto &s : t.segments) {
      if(const auto *g = std::get_if<task::Gap>(&s)) {
        gaps.push_back(g);
      }
    }
    expect_arity(r.gaps.size(), gaps.size(), "cloze");
    std::vector<ItemVerdict> perItem;
    for(std::size_t i = 0; i < gaps.size(); ++i) {
      perItem.push_back(text_verdict(r.gaps[i], gaps[i]->accepted, gaps[i]->policy));
    }
    return fraction(std::move(perItem));
  }

  GradeResult operator()(const task::Dictation &t, const response::Dictation &r) const {
    auto result = fraction({text_verdict(r.text, {t.sampleSolution}, t.policy)});
    result.sampleSolution = t.sampleSolution;
    return result;
  }

  GradeResult operator()(const task::MultipleChoice &t, const response::MultipleChoice &r) const {
    return selection(t.correctAnswers, r.selected, t.answers.size());
  }

  GradeResult operator()(const task::TextQuiz &t, const response::TextQuiz &r) const {
    auto result = fraction({text_verdict(r.text, t.accepted, t.policy)});
    if(!t.accepted.empty()) {
      result.sampleSolution = t.accepted.front();
    }
    return result;
  }

  GradeResult operator()(const task::Crossword &t, const response::Crossword &r) const {
    expect_arity(r.letters.size(), t.cells.size(), "crossword");
    std::map<task::GridPos, std::size_t> first;
    std::vector<ItemVerdict> perItem;
    for(std::size_t i = 0; i < t.cells.size(); ++i) {
      first.emplace(task::GridPos{t.cells[i].row, t.cells[i].col}, i);
      perItem.push_back(text_verdict(r.letters[i], {t.cells[i].letter}, kLetterPolicy));
    }
    std::int64_t hits = 0;
    for(const auto &pos : t.solutionCells) {
      const auto it = first.find(pos);
      if(it != first.end() && perItem[it->second] == ItemVerdict::Correct) {
        ++hits;
      }
    }
    GradeResult result;
    result.score = t.solutionCells.empty() ? Score(0, 1)
                                           : Score(hits, static_cast<std::int64_t>(t.solutionCells.size()));
    result.correct = !t.solutionCells.empty() && result.score.is_one();
    result.perItem = std::move(perItem);
    return result;
  }

  GradeResult operator()(const task::DropDownList &t, const response::DropDownList &r) const {
    std::vector<const task::Choice *> gaps;
    for(const auto &s : t.segments) {
      if(const auto *c = std::get_if<task::Choice>(&s)) {
        gaps.push_back(c);
      }
    }
    expect_arity(r.choices.size(), gaps.size(), "dropdownlist");
    std::vector<ItemVerdict> perItem;
    for(std::size_t i = 0; i < gaps.size(); ++i) {
      if(r.choices[i] && *r.choices[i] >= gaps[i]->options.size()) {
        shape(fmt::format("dropdownlist: option {} out of range", *r.choices[i]));
      }
      perItem.push_back(index_verdict(r.choices[i], gaps[i]->correctIndex));
    }
    return fraction(std::move(perItem));
  }

  GradeResult operator()(const task::Memory &t, const response::Memory &r) const {
    const auto n = t.cards.size();
    std::vector<std::optional<std::size_t>> partner(n);
    for(const auto &[a, b] : r.matches) {
      if(a >= n || b >= n || a == b || partner[a] || partner[b]) {
        shape(fmt::format("memory: invalid match ({}, {})", a, b));
      }
      partner[a] = b;
      partner[b] = a;
    }
    std::vector<ItemVerdict> perItem;
    for(std::size_t i = 0; i < n; ++i) {
      perItem.push_back(index_verdict(partner[i], t.pairing[i]));
    }
    return fraction(std::move(perItem));
  }

  GradeResult operator()(const task::TextSelection &t, const response::TextSelection &r) const {
    return selection(t.correctTokens, r.selected, t.tokens.size());
  }

  template <class T, class R> GradeResult operator()(const T &, const R &) const {
    throw Error(ErrorCode::KindMismatch, "response kind does not match task kind");
  }
};

} // namespace

GradeResult grade(const TaskSpec &task, const Response &response) {
  if(kind_of(task) == ExerciseKind::MediaOverlay) {
    throw Error(ErrorCode::Ungradeable, "media overlay tasks are not graded");
  }
  if(kind_of(task) != kind_of(response)) {
    throw Error(ErrorCode::KindMismatch, fmt::format("response for {} given to a {} task", kind_name(kind_of(response)),
                                                     kind_name(kind_of(task))));
  }
  return std::visit(Grader{}, task, response);
}

std::optional<Point> reachable_drop_point(const task::DragDropImage &t, std::size_t i) {
  const auto &zone = t.draggables.at(i).zone;
  std::vector<const Rect *> earlier;
  for(std::size_t j = 0; j < i; ++j) {
    if(!(t.draggables[j].zone == zone)) {
      earlier.push_back(&t.draggables[j].zone);
    }
  }
  // The uncovered part of the zone, if any, contains a point built from the
  // edges of the zones involved: an edge itself or a midpoint between two.
  auto candidates = [&](double lo, double len, auto edge) {
    std::vector<double> cuts{lo, lo + len};
    for(const auto *r : earlier) {
      for(const double v : {edge(*r).first, edge(*r).second}) {
        if(v > lo && v < lo + len) {
          cuts.push_back(v);
        }
      }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::vector<double> out;
    for(std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      out.push_back((cuts[k] + cuts[k + 1]) / 2);
    }
    out.insert(out.end(), cuts.begin(), cuts.end());
    return out;
  };
  const auto xs = candidates(zone.x, zone.width, [](const Rect &r) { return std::pair{r.x, r.x + r.width}; });
  const auto ys = candidates(zone.y, zone.height, [](const Rect &r) { return std::pair{r.y, r.y + r.height}; });
  for(const double x : xs) {
    for(const double y : ys) {
      if(!zone.contains(x, y)) {
        continue;
      }
      if(std::none_of(earlier.begin(), earlier.end(), [&](const Rect *r) { return r->contains(x, y); })) {
        return Point{x, y};
      }
    }
  }
  return std::nullopt;
}

Response correct_response(const TaskSpec &task) {
  return std::visit(
      overloaded{
          [](const task::PairAssignment &t) -> Response {
            response::PairAssignment r;
            r.slots.resize(t.pairs.size());
            for(std::size_t slot = 0; slot < t.pairs.size(); ++slot) {
              const auto left = t.rightOrder.empty() ? slot : t.rightOrder[slot];
              r.slots[left] = slot;
            }
            return r;
          },
          [](const task::GroupAssignment &t) -> Response {
            response::GroupAssignment r;
            for(std::size_t g = 0; g < t.groups.size(); ++g) {
              r.groups.insert(r.groups.end(), t.groups[g].members.size(), g);
            }
            return r;
          },
          [](const task::OrderAssignment &t) -> Response {
            response::OrderAssignment r;
            for(std::size_t i = 0; i < t.items.size(); ++i) {
              r.order.emplace_back(i);
            }
            return r;
          },
          [](const task::DragDropImage &t) -> Response {
            response::DragDropImage r;
            for(std::size_t i = 0; i < t.draggables.size(); ++i) {
              r.drops.push_back(reachable_drop_point(t, i));
            }
            return r;
          },
          [](const task::Cloze &t) -> Response {
            response::Cloze r;
            for(const auto &s : t.segments) {
              if(const auto *g = std::get_if<task::Gap>(&s)) {
                r.gaps.emplace_back(g->accepted.front());
              }
            }
            return r;
          },
          [](const task::Dictation &t) -> Response { return response::Dictation{t.sampleSolution}; },
          [](const task::MultipleChoice &t) -> Response { return response::MultipleChoice{t.correctAnswers}; },
          [](const task::TextQuiz &t) -> Response { return response::TextQuiz{t.accepted.front()}; },
          [](const task::Crossword &t) -> Response {
            response::Crossword r;
            for(const auto &c : t.cells) {
              r.letters.emplace_back(c.letter);
            }
            return r;
          },
          [](const task::DropDownList &t) -> Response {
            response::DropDownList r;
            for(const auto &s : t.segments) {
              if(const auto *c = std::get_if<task::Choice>(&s)) {
                r.choices.emplace_back(c->correctIndex);
              }
            }
            return r;
          },
          [](const task::Memory &t) -> Response {
            response::Memory r;
            for(std::size_t i = 0; i < t.pairing.size(); ++i) {
              if(i < t.pairing[i]) {
                r.matches.emplace_back(i, t.pairing[i]);
              }
            }
            return r;
          },
          [](const task::TextSelection &t) -> Response { return response::TextSelection{t.correctTokens}; },
          [](const task::MediaOverlay &) -> Response {
            throw Error(ErrorCode::Ungradeable, "media overlay tasks are not graded");
          },
      },
      task);
}

Response empty_response(const TaskSpec &task) {
  const auto n = item_count(task);
  switch(kind_of(task)) {
  case ExerciseKind::PairAssignment: return response::PairAssignment{std::vector<std::optional<std::size_t>>(n)};
  case ExerciseKind::GroupAssignment: return response::GroupAssignment{std::vector<std::optional<std::size_t>>(n)};
  case ExerciseKind::OrderAssignment: return response::OrderAssignment{std::vector<std::optional<std::size_t>>(n)};
  case ExerciseKind::DragDropImage: return response::DragDropImage{std::vector<std::optional<Point>>(n)};
  case ExerciseKind::Cloze: return response::Cloze{std::vector<std::optional<std::string>>(n)};
  case ExerciseKind::Dictation: return response::Dictation{};
  case ExerciseKind::MultipleChoice: return response::MultipleChoice{};
  case ExerciseKind::TextQuiz: return response::TextQuiz{};
  case ExerciseKind::Crossword: return response::Crossword{std::vector<std::optional<std::string>>(n)};
  case ExerciseKind::DropDownList: return response::DropDownList{std::vector<std::optional<std::size_t>>(n)};
  case ExerciseKind::Memory: return response::Memory{};
  case ExerciseKind::TextSelection: return response::TextSelection{};
  case ExerciseKind::MediaOverlay: break;
  }
  throw Error(ErrorCode::Ungradeable, "media overlay tasks are not graded");
}

} // namespace exbook::model

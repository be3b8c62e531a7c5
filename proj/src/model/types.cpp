#include <exbook/model/types.hpp>

#include <numeric>
#include <stdexcept>

namespace exbook::model {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::array<std::string_view, 13> kKindNames = {
    "pairassignment", "groupassignment", "orderassignment", "dragdropimage", "cloze",
    "dictation",      "multiplechoice",  "textquiz",        "crossword",     "dropdownlist",
    "memory",         "textselection",   "mediaoverlay",
};

template <class Enum, std::size_t N>
std::optional<Enum> lookup(const std::array<std::string_view, N> &names, std::string_view name) {
  for(std::size_t i = 0; i < N; ++i) {
    if(names[i] == name) {
      return static_cast<Enum>(i);
    }
  }
  return std::nullopt;
}

constexpr std::array<std::string_view, 3> kMediaNames = {"image", "audio", "video"};
constexpr std::array<std::string_view, 6> kCefrNames = {"A1", "A2", "B1", "B2", "C1", "C2"};
constexpr std::array<std::string_view, 5> kCompetenceNames = {
    "listening", "reading", "spokenInteraction", "spokenProduction", "writing"};
constexpr std::array<std::string_view, 4> kCategoryNames = {"phonetics", "grammar", "conjugation",
                                                             "vocabulary"};

void collect(const Item &item, std::vector<MediaRef> &out) {
  if(const auto *m = std::get_if<MediaRef>(&item)) {
    out.push_back(*m);
  }
}

} // namespace

std::string_view kind_name(ExerciseKind kind) { return kKindNames[static_cast<std::size_t>(kind)]; }

std::optional<ExerciseKind> kind_from_name(std::string_view name) {
  return lookup<ExerciseKind>(kKindNames, name);
}

bool is_gradeable(ExerciseKind kind) { return kind != ExerciseKind::MediaOverlay; }

bool is_shuffleable(ExerciseKind kind) {
  return kind == ExerciseKind::MultipleChoice || kind == ExerciseKind::Memory ||
         kind == ExerciseKind::PairAssignment;
}

std::string_view media_kind_name(MediaKind kind) { return kMediaNames[static_cast<std::size_t>(kind)]; }
std::optional<MediaKind> media_kind_from_name(std::string_view name) {
  return lookup<MediaKind>(kMediaNames, name);
}

std::string_view cefr_name(CefrLevel level) { return kCefrNames[static_cast<std::size_t>(level)]; }
std::optional<CefrLevel> cefr_from_name(std::string_view name) { return lookup<CefrLevel>(kCefrNames, name); }
std::string_view competence_name(Competence c) { return kCompetenceNames[static_cast<std::size_t>(c)]; }
std::optional<Competence> competence_from_name(std::string_view name) {
  return lookup<Competence>(kCompetenceNames, name);
}
std::string_view category_name(Category c) { return kCategoryNames[static_cast<std::size_t>(c)]; }
std::optional<Category> category_from_name(std::string_view name) {
  return lookup<Category>(kCategoryNames, name);
}

ExerciseKind kind_of(const TaskSpec &task) { return static_cast<ExerciseKind>(task.index()); }

ExerciseKind kind_of(const Response &response) { return static_cast<ExerciseKind>(response.index()); }

std::size_t item_count(const TaskSpec &task) {
  return std::visit(
      overloaded{
          [](const task::PairAssignment &t) { return t.pairs.size(); },
          [](const task::GroupAssignment &t) {
            std::size_t n = 0;
            for(const auto &g : t.groups) {
              n += g.members.size();
            }
            return n;
          },
          [](const task::OrderAssignment &t) { return t.items.size(); },
          [](const task::DragDropImage &t) { return t.draggables.size(); },
          [](const task::Cloze &t) {
            std::size_t n = 0;
            for(const auto &s : t.segments) {
              n += std::holds_alternative<task::Gap>(s) ? 1 : 0;
            }
            return n;
          },
          [](const task::Dictation &) -> std::size_t { return 1; },
          [](const task::MultipleChoice &t) { return t.answers.size(); },
          [](const task::TextQuiz &) -> std::size_t { return 1; },
          [](const task::Crossword &t) { return t.cells.size(); },
          [](const task::DropDownList &t) {
            std::size_t n = 0;
            for(const auto &s : t.segments) {
              n += std::holds_alternative<task::Choice>(s) ? 1 : 0;
            }
            return n;
          },
          [](const task::Memory &t) { return t.cards.size(); },
          [](const task::TextSelection &t) { return t.tokens.size(); },
          [](const task::MediaOverlay &t) { return t.clips.size(); },
      },
      task);
}

std::vector<MediaRef> media_refs(const TaskSpec &task) {
  std::vector<MediaRef> out;
  std::visit(overloaded{
                 [&](const task::PairAssignment &t) {
                   for(const auto &p : t.pairs) {
                     collect(p.left, out);
                     collect(p.right, out);
                   }
                 },
                 [&](const task::GroupAssignment &t) {
                   for(const auto &g : t.groups) {
                     for(const auto &m : g.members) {
                       collect(m, out);
                     }
                   }
                 },
                 [&](const task::OrderAssignment &t) {
                   for(const auto &i : t.items) {
                     collect(i, out);
                   }
                 },
                 [&](const task::DragDropImage &t) { out.push_back(t.background); },
                 [&](const task::Dictation &t) { out.push_back(t.audio); },
                 [&](const task::MultipleChoice &t) {
                   if(t.media) {
                     out.push_back(*t.media);
                   }
                 },
                 [&](const task::Memory &t) {
                   for(const auto &c : t.cards) {
                     collect(c, out);
                   }
                 },
                 [&](const task::MediaOverlay &t) { out.push_back(t.audio); },
                 [](const auto &) {},
             },
             task);
  return out;
}

std::vector<MediaRef> media_refs(const ExerciseDefinition &def) {
  std::vector<MediaRef> out;
  for(const auto &t : def.tasks) {
    auto refs = media_refs(t);
    out.insert(out.end(), refs.begin(), refs.end());
  }
  return out;
}

Score::Score(std::int64_t num, std::int64_t den) {
  if(den <= 0 || num < 0 || num > den) {
    throw std::invalid_argument("score outside [0,1]");
  }
  const auto g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
  if(num_ == 0) {
    den_ = 1;
  }
}

std::strong_ordering Score::operator<=>(const Score &other) const {
  return num_ * other.den_ <=> other.num_ * den_;
}

std::string_view verdict_name(ItemVerdict v) {
  switch(v) {
  case ItemVerdict::Correct: return "correct";
  case ItemVerdict::Incorrect: return "incorrect";
  case ItemVerdict::Unanswered: return "unanswered";
  }
  return "unanswered";
}

} // namespace exbook::model

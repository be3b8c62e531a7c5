#include <exbook/error.hpp>
#include <exbook/model/grade.hpp>
#include <exbook/model/sampling.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <map>

namespace exbook::model {

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };
template <class... Ts> overloaded(Ts...) -> overloaded<Ts...>;

constexpr std::array<std::string_view, 24> kWords = {
    "chat",   "chien",  "maison",  "été",    "école", "garçon", "fenêtre", "pâte",
    "hôtel",  "élève",  "Noël",    "où",     "ça",    "déjà",   "bleu",    "pourpre",
    "jaune",  "fleur",  "Paris",   "livre",  "était", "avait",  "mangé",   "naïf",
};

constexpr std::string_view kLetters = "ABCDEFGHIJKLMNOPQRSTUVWXYZ";

std::size_t between(SeededRng &rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng.below(hi - lo + 1));
}

bool chance(SeededRng &rng, unsigned percent) { return rng.below(100) < percent; }

std::vector<std::string> distinct_words(SeededRng &rng, std::size_t n) {
  std::vector<std::string> pool(kWords.begin(), kWords.end());
  rng.shuffle(pool);
  pool.resize(std::min(n, pool.size()));
  return pool;
}

MediaRef random_media(MediaKind kind, SeededRng &rng) {
  MediaRef m;
  m.kind = kind;
  m.basename = fmt::format("{}{}", media_kind_name(kind), rng.below(5));
  if(chance(rng, 40)) {
    m.license = LicenseInfo{"Work " + std::to_string(rng.below(10)), "Author", "CC BY 4.0",
                            chance(rng, 50) ? std::optional<std::string>("https://example.org/work") : std::nullopt};
  }
  return m;
}

Item random_item(SeededRng &rng) {
  if(chance(rng, 15)) {
    return random_media(MediaKind::Image, rng);
  }
  return random_word(rng);
}

std::set<std::size_t> random_subset(SeededRng &rng, std::size_t n, bool nonEmpty) {
  std::set<std::size_t> out;
  for(std::size_t i = 0; i < n; ++i) {
    if(chance(rng, 40)) {
      out.insert(i);
    }
  }
  if(nonEmpty && out.empty() && n > 0) {
    out.insert(static_cast<std::size_t>(rng.below(n)));
  }
  return out;
}

// Typed text near an accepted answer: exact, re-cased, accent-stripped,
// padded, wrong or missing.
std::optional<std::string> random_typing(const std::vector<std::string> &accepted, SeededRng &rng) {
  const auto &base = accepted[rng.below(accepted.size())];
  switch(rng.below(7)) {
  case 0: return std::nullopt;
  case 1: return std::string();
  case 2: return base;
  case 3: {
    auto s = base;
    if(!s.empty() && s[0] >= 'a' && s[0] <= 'z') {
      s[0] = static_cast<char>(s[0] - 'a' + 'A');
    }
    return s;
  }
  case 4: return "  " + base + "  ";
  case 5: {
    std::string s;
    for(std::size_t i = 0; i < base.size(); ++i) {
      // Drop the accent of é/è/ê/à/ç etc. by mapping common two-byte sequences.
      const auto c = static_cast<unsigned char>(base[i]);
      if(c == 0xC3 && i + 1 < base.size()) {
        const auto d = static_cast<unsigned char>(base[i + 1]);
        const char plain = d >= 0xA8 && d <= 0xAB ? 'e'
                           : d >= 0xA0 && d <= 0xA5 ? 'a'
                           : d == 0xA7             ? 'c'
                           : d >= 0xB2 && d <= 0xB6 ? 'o'
                           : d >= 0xAC && d <= 0xAF ? 'i'
                           : d >= 0xB9 && d <= 0xBC ? 'u'
                                                    : '?';
        s += plain;
        ++i;
      } else {
        s += base[i];
      }
    }
    return s;
  }
  default: return random_word(rng);
  }
}

template <class T> std::optional<T> maybe(SeededRng &rng, T value, unsigned percentMissing = 20) {
  if(chance(rng, percentMissing)) {
    return std::nullopt;
  }
  return value;
}

task::Crossword random_crossword(SeededRng &rng) {
  // One across word and one down word crossing it, within a 5x5 grid.
  task::Crossword cw;
  std::map<task::GridPos, std::string> grid;
  const int acrossLen = static_cast<int>(between(rng, 2, 5));
  const int acrossRow = static_cast<int>(rng.below(5));
  const int acrossCol = static_cast<int>(rng.below(static_cast<std::uint64_t>(5 - acrossLen + 1)));
  for(int k = 0; k < acrossLen; ++k) {
    grid[{acrossRow, acrossCol + k}] = std::string(1, kLetters[rng.below(kLetters.size())]);
  }
  cw.entries.push_back({"across clue", task::Direction::Across, acrossRow, acrossCol, acrossLen});

  const int crossCol = acrossCol + static_cast<int>(rng.below(static_cast<std::uint64_t>(acrossLen)));
  const int downLen = static_cast<int>(between(rng, 2, 5));
  const int minStart = std::max(0, acrossRow - downLen + 1);
  const int maxStart = std::min(acrossRow, 5 - downLen);
  if(minStart <= maxStart) {
    const int downRow = minStart + static_cast<int>(rng.below(static_cast<std::uint64_t>(maxStart - minStart + 1)));
    for(int k = 0; k < downLen; ++k) {
      grid.try_emplace({downRow + k, crossCol}, std::string(1, kLetters[rng.below(kLetters.size())]));
    }
    cw.entries.push_back({"down clue", task::Direction::Down, downRow, crossCol, downLen});
  }

  std::vector<task::GridPos> positions;
  for(const auto &[pos, letter] : grid) {
    cw.cells.push_back({pos.row, pos.col, letter});
    positions.push_back(pos);
  }
  rng.shuffle(positions);
  positions.resize(between(rng, 1, positions.size()));
  cw.solutionCells = positions;
  return cw;
}

} // namespace

std::string random_word(SeededRng &rng) { return std::string(kWords[rng.below(kWords.size())]); }

NormalizationPolicy random_policy(SeededRng &rng) {
  return {chance(rng, 50), chance(rng, 50), chance(rng, 50)};
}

TaskSpec random_task(ExerciseKind kind, SeededRng &rng) {
  switch(kind) {
  case ExerciseKind::PairAssignment: {
    task::PairAssignment t;
    const auto n = between(rng, 1, 5);
    for(std::size_t i = 0; i < n; ++i) {
      t.pairs.push_back({random_item(rng), random_item(rng)});
    }
    if(chance(rng, 50)) {
      t.rightOrder = rng.permutation(n);
    }
    return t;
  }
  case ExerciseKind::GroupAssignment: {
    task::GroupAssignment t;
    const auto groups = between(rng, 1, 3);
    for(std::size_t g = 0; g < groups; ++g) {
      task::Group group{fmt::format("group {}", g + 1), {}};
      const auto members = between(rng, 1, 3);
      for(std::size_t m = 0; m < members; ++m) {
        group.members.push_back(random_item(rng));
      }
      t.groups.push_back(std::move(group));
    }
    return t;
  }
  case ExerciseKind::OrderAssignment: {
    task::OrderAssignment t;
    const auto n = between(rng, 1, 6);
    for(std::size_t i = 0; i < n; ++i) {
      t.items.push_back(random_item(rng));
    }
    return t;
  }
  case ExerciseKind::DragDropImage: {
    task::DragDropImage t;
    t.background = random_media(MediaKind::Image, rng);
    const auto n = between(rng, 1, 4);
    while(t.draggables.size() < n) {
      const double w = 0.05 + static_cast<double>(rng.below(30)) / 100.0;
      const double h = 0.05 + static_cast<double>(rng.below(30)) / 100.0;
      const double x = static_cast<double>(rng.below(static_cast<std::uint64_t>((1.0 - w) * 100))) / 100.0;
      const double y = static_cast<double>(rng.below(static_cast<std::uint64_t>((1.0 - h) * 100))) / 100.0;
      t.draggables.push_back({random_word(rng), {x, y, w, h}});
      if(!reachable_drop_point(t, t.draggables.size() - 1)) {
        t.draggables.pop_back(); // swallowed by earlier zones
      }
    }
    return t;
  }
  case ExerciseKind::Cloze: {
    task::Cloze t;
    const auto gaps = between(rng, 1, 4);
    for(std::size_t g = 0; g < gaps; ++g) {
      if(g == 0 || chance(rng, 80)) {
        t.segments.emplace_back(random_word(rng) + " ");
      }
      task::Gap gap;
      gap.accepted = distinct_words(rng, between(rng, 1, 2));
      gap.policy = random_policy(rng);
      t.segments.emplace_back(std::move(gap));
    }
    if(chance(rng, 50)) {
      t.segments.emplace_back(std::string("."));
    }
    return t;
  }
  case ExerciseKind::Dictation: {
    task::Dictation t;
    t.audio = random_media(MediaKind::Audio, rng);
    t.sampleSolution = random_word(rng) + " " + random_word(rng);
    t.policy = random_policy(rng);
    return t;
  }
  case ExerciseKind::MultipleChoice: {
    task::MultipleChoice t;
    t.question = "Question " + random_word(rng) + " ?";
    t.answers = distinct_words(rng, between(rng, 1, 5));
    t.multiSelect = chance(rng, 50);
    if(t.multiSelect) {
      t.correctAnswers = random_subset(rng, t.answers.size(), true);
    } else {
      t.correctAnswers = {static_cast<std::size_t>(rng.below(t.answers.size()))};
    }
    if(chance(rng, 30)) {
      t.media = random_media(chance(rng, 50) ? MediaKind::Video : MediaKind::Image, rng);
    }
    return t;
  }
  case ExerciseKind::TextQuiz: {
    task::TextQuiz t;
    t.question = "Question " + random_word(rng) + " ?";
    t.accepted = distinct_words(rng, between(rng, 1, 3));
    t.policy = random_policy(rng);
    return t;
  }
  case ExerciseKind::Crossword: return random_crossword(rng);
  case ExerciseKind::DropDownList: {
    task::DropDownList t;
    const auto gaps = between(rng, 1, 3);
    for(std::size_t g = 0; g < gaps; ++g) {
      t.segments.emplace_back(random_word(rng) + " ");
      task::Choice c;
      c.options = distinct_words(rng, between(rng, 1, 4));
      c.correctIndex = static_cast<std::size_t>(rng.below(c.options.size()));
      t.segments.emplace_back(std::move(c));
    }
    return t;
  }
  case ExerciseKind::Memory: {
    task::Memory t;
    const auto pairs = between(rng, 1, 4);
    for(std::size_t i = 0; i < 2 * pairs; ++i) {
      t.cards.push_back(random_item(rng));
    }
    auto order = rng.permutation(2 * pairs);
    t.pairing.assign(2 * pairs, 0);
    for(std::size_t i = 0; i < order.size(); i += 2) {
      t.pairing[order[i]] = order[i + 1];
      t.pairing[order[i + 1]] = order[i];
    }
    return t;
  }
  case ExerciseKind::TextSelection: {
    task::TextSelection t;
    const auto n = between(rng, 1, 8);
    for(std::size_t i = 0; i < n; ++i) {
      t.tokens.push_back(random_word(rng));
    }
    t.correctTokens = random_subset(rng, n, true);
    return t;
  }
  case ExerciseKind::MediaOverlay: {
    task::MediaOverlay t;
    t.audio = random_media(MediaKind::Audio, rng);
    const auto n = between(rng, 1, 5);
    double at = static_cast<double>(rng.below(1000)) / 1000.0;
    for(std::size_t i = 0; i < n; ++i) {
      const double length = 0.001 + static_cast<double>(rng.below(5000000)) / 1e6;
      t.clips.push_back({fmt::format("s{}", i + 1), at, at + length, random_word(rng)});
      at += length + static_cast<double>(rng.below(500)) / 1000.0;
    }
    return t;
  }
  }
  return task::TextQuiz{};
}

Response random_response(const TaskSpec &task, SeededRng &rng) {
  return std::visit(
      overloaded{
          [&](const task::PairAssignment &t) -> Response {
            const auto n = t.pairs.size();
            auto slots = rng.permutation(n);
            response::PairAssignment r;
            for(std::size_t i = 0; i < n; ++i) {
              r.slots.push_back(maybe(rng, slots[i]));
            }
            return r;
          },
          [&](const task::GroupAssignment &t) -> Response {
            response::GroupAssignment r;
            for(std::size_t g = 0; g < t.groups.size(); ++g) {
              for(std::size_t m = 0; m < t.groups[g].members.size(); ++m) {
                const auto pick = chance(rng, 50) ? g : static_cast<std::size_t>(rng.below(t.groups.size()));
                r.groups.push_back(maybe(rng, pick));
              }
            }
            return r;
          },
          [&](const task::OrderAssignment &t) -> Response {
            response::OrderAssignment r;
            auto perm = rng.permutation(t.items.size());
            if(chance(rng, 20)) {
              for(std::size_t i = 0; i < perm.size(); ++i) {
                perm[i] = i;
              }
            }
            for(auto p : perm) {
              r.order.push_back(maybe(rng, p, 10));
            }
            return r;
          },
          [&](const task::DragDropImage &t) -> Response {
            response::DragDropImage r;
            for(const auto &d : t.draggables) {
              if(chance(rng, 50)) {
                const double fx = static_cast<double>(rng.below(101)) / 100.0;
                const double fy = static_cast<double>(rng.below(101)) / 100.0;
                r.drops.push_back(maybe(rng, Point{d.zone.x + fx * d.zone.width, d.zone.y + fy * d.zone.height}));
              } else {
                r.drops.push_back(maybe(rng, Point{static_cast<double>(rng.below(1001)) / 1000.0,
                                                   static_cast<double>(rng.below(1001)) / 1000.0}));
              }
            }
            return r;
          },
          [&](const task::Cloze &t) -> Response {
            response::Cloze r;
            for(const auto &s : t.segments) {
              if(const auto *g = std::get_if<task::Gap>(&s)) {
                r.gaps.push_back(random_typing(g->accepted, rng));
              }
            }
            return r;
          },
          [&](const task::Dictation &t) -> Response {
            return response::Dictation{random_typing({t.sampleSolution}, rng)};
          },
          [&](const task::MultipleChoice &t) -> Response {
            if(chance(rng, 30)) {
              return response::MultipleChoice{t.correctAnswers};
            }
            return response::MultipleChoice{random_subset(rng, t.answers.size(), false)};
          },
          [&](const task::TextQuiz &t) -> Response { return response::TextQuiz{random_typing(t.accepted, rng)}; },
          [&](const task::Crossword &t) -> Response {
            response::Crossword r;
            const bool mostlyRight = chance(rng, 50);
            for(const auto &c : t.cells) {
              if(chance(rng, 10)) {
                r.letters.emplace_back(std::nullopt);
              } else if(mostlyRight && chance(rng, 85)) {
                std::string l = c.letter;
                if(chance(rng, 30) && l[0] >= 'A' && l[0] <= 'Z') {
                  l[0] = static_cast<char>(l[0] - 'A' + 'a');
                }
                r.letters.emplace_back(l);
              } else {
                r.letters.emplace_back(std::string(1, kLetters[rng.below(kLetters.size())]));
              }
            }
            return r;
          },
          [&](const task::DropDownList &t) -> Response {
            response::DropDownList r;
            for(const auto &s : t.segments) {
              if(const auto *c = std::get_if<task::Choice>(&s)) {
                const auto pick = chance(rng, 50) ? c->correctIndex : static_cast<std::size_t>(rng.below(c->options.size()));
                r.choices.push_back(maybe(rng, pick));
              }
            }
            return r;
          },
          [&](const task::Memory &t) -> Response {
            response::Memory r;
            std::vector<bool> used(t.cards.size(), false);
            for(std::size_t i = 0; i < t.cards.size(); ++i) {
              if(used[i] || chance(rng, 25)) {
                continue;
              }
              std::size_t partner = t.pairing[i];
              if(chance(rng, 40)) {
                partner = static_cast<std::size_t>(rng.below(t.cards.size()));
              }
              if(partner == i || used[partner]) {
                continue;
              }
              used[i] = used[partner] = true;
              r.matches.emplace_back(i, partner);
            }
            return r;
          },
          [&](const task::TextSelection &t) -> Response {
            if(chance(rng, 30)) {
              return response::TextSelection{t.correctTokens};
            }
            return response::TextSelection{random_subset(rng, t.tokens.size(), false)};
          },
          [&](const task::MediaOverlay &) -> Response {
            throw Error(ErrorCode::Ungradeable, "media overlay tasks have no response");
          },
      },
      task);
}

ExerciseDefinition random_definition(ExerciseKind kind, std::string id, SeededRng &rng, std::size_t maxTasks) {
  ExerciseDefinition def;
  def.id = std::move(id);
  def.kind = kind;
  const auto n = between(rng, 1, std::max<std::size_t>(1, maxTasks));
  for(std::size_t i = 0; i < n; ++i) {
    def.tasks.push_back(random_task(kind, rng));
  }
  if(chance(rng, 50)) {
    def.meta.cefrLevel = static_cast<CefrLevel>(rng.below(6));
  }
  for(int c = 0; c < 5; ++c) {
    if(chance(rng, 30)) {
      def.meta.competences.insert(static_cast<Competence>(c));
    }
  }
  if(chance(rng, 50)) {
    def.meta.category = static_cast<Category>(rng.below(4));
  }
  if(chance(rng, 20)) {
    def.uiLanguage = "fr";
  }
  return def;
}

} // namespace exbook::model

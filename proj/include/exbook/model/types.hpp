#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace exbook::model {

// Enumerator order matches the TaskSpec and Response variant order.
enum class ExerciseKind {
  PairAssignment,
  GroupAssignment,
  OrderAssignment,
  DragDropImage,
  Cloze,
  Dictation,
  MultipleChoice,
  TextQuiz,
  Crossword,
  DropDownList,
  Memory,
  TextSelection,
  MediaOverlay,
};

inline constexpr std::array<ExerciseKind, 13> kAllKinds = {
    ExerciseKind::PairAssignment, ExerciseKind::GroupAssignment, ExerciseKind::OrderAssignment,
    ExerciseKind::DragDropImage,  ExerciseKind::Cloze,           ExerciseKind::Dictation,
    ExerciseKind::MultipleChoice, ExerciseKind::TextQuiz,        ExerciseKind::Crossword,
    ExerciseKind::DropDownList,   ExerciseKind::Memory,          ExerciseKind::TextSelection,
    ExerciseKind::MediaOverlay,
};

/// Lowercase name used as the anchor element class and in every serialized form
/// ("multiplechoice", "dragdropimage", ...).
std::string_view kind_name(ExerciseKind kind);
std::optional<ExerciseKind> kind_from_name(std::string_view name);
bool is_gradeable(ExerciseKind kind);
bool is_shuffleable(ExerciseKind kind);

enum class MediaKind { Image, Audio, Video };

std::string_view media_kind_name(MediaKind kind);
std::optional<MediaKind> media_kind_from_name(std::string_view name);

struct LicenseInfo {
  std::string workTitle;
  std::string author;
  std::string licenseName;
  std::optional<std::string> sourceUrl;

  auto operator<=>(const LicenseInfo &) const = default;
};

struct MediaRef {
  MediaKind kind = MediaKind::Image;
  std::string basename; // no extension, no directory
  std::optional<LicenseInfo> license;

  auto operator<=>(const MediaRef &) const = default;
};

using Item = std::variant<std::string, MediaRef>;

enum class CefrLevel { A1, A2, B1, B2, C1, C2 };
enum class Competence { Listening, Reading, SpokenInteraction, SpokenProduction, Writing };
enum class Category { Phonetics, Grammar, Conjugation, Vocabulary };

std::string_view cefr_name(CefrLevel level);
std::optional<CefrLevel> cefr_from_name(std::string_view name);
std::string_view competence_name(Competence c);
std::optional<Competence> competence_from_name(std::string_view name);
std::string_view category_name(Category c);
std::optional<Category> category_from_name(std::string_view name);

struct ExerciseMeta {
  std::optional<CefrLevel> cefrLevel;
  std::set<Competence> competences;
  std::optional<Category> category;

  bool operator==(const ExerciseMeta &) const = default;
};

/// Unicode composition (NFC) is always applied; the three flags select the
/// optional folds on top of it.
struct NormalizationPolicy {
  bool caseSensitive = false;
  bool diacriticSensitive = true;
  bool collapseWhitespace = true;

  bool operator==(const NormalizationPolicy &) const = default;

  static NormalizationPolicy strict() { return {true, true, false}; }
  static NormalizationPolicy lenient() { return {false, false, true}; }
};

/// Fractions of the background image.
struct Rect {
  double x = 0;
  double y = 0;
  double width = 0;
  double height = 0;

  bool contains(double px, double py) const {
    return px >= x && px <= x + width && py >= y && py <= y + height;
  }
  bool operator==(const Rect &) const = default;
};

struct Point {
  double x = 0;
  double y = 0;
  bool operator==(const Point &) const = default;
};

namespace task {

struct Pair {
  Item left;
  Item right;
  bool operator==(const Pair &) const = default;
};

/// `rightOrder[slot]` is the pair whose right item is displayed in `slot`.
/// Empty means identity order.
struct PairAssignment {
  std::vector<Pair> pairs;
  std::vector<std::size_t> rightOrder;
  bool operator==(const PairAssignment &) const = default;
};

struct Group {
  std::string label;
  std::vector<Item> members;
  bool operator==(const Group &) const = default;
};

struct GroupAssignment {
  std::vector<Group> groups;
  bool operator==(const GroupAssignment &) const = default;
};

struct OrderAssignment {
  std::vector<Item> items; // in the correct order
  bool operator==(const OrderAssignment &) const = default;
};

struct Draggable {
  std::string label;
  Rect zone;
  bool operator==(const Draggable &) const = default;
};

struct DragDropImage {
  MediaRef background;
  std::vector<Draggable> draggables;
  bool operator==(const DragDropImage &) const = default;
};

struct Gap {
  std::vector<std::string> accepted;
  NormalizationPolicy policy;
  bool operator==(const Gap &) const = default;
};

struct Cloze {
  std::vector<std::variant<std::string, Gap>> segments;
  bool operator==(const Cloze &) const = default;
};

struct Dictation {
  MediaRef audio;
  std::string sampleSolution;
  NormalizationPolicy policy;
  bool operator==(const Dictation &) const = default;
};

struct MultipleChoice {
  std::string question;
  std::vector<std::string> answers;
  std::set<std::size_t> correctAnswers;
  bool multiSelect = false;
  std::optional<MediaRef> media;
  bool operator==(const MultipleChoice &) const = default;
};

struct TextQuiz {
  std::string question;
  std::vector<std::string> accepted;
  NormalizationPolicy policy;
  bool operator==(const TextQuiz &) const = default;
};

struct Cell {
  int row = 0;
  int col = 0;
  std::string letter;
  bool operator==(const Cell &) const = default;
};

enum class Direction { Across, Down };

struct CrosswordEntry {
  std::string clue;
  Direction direction = Direction::Across;
  int startRow = 0;
  int startCol = 0;
  int length = 0;
  bool operator==(const CrosswordEntry &) const = default;
};

struct GridPos {
  int row = 0;
  int col = 0;
  auto operator<=>(const GridPos &) const = default;
};

struct Crossword {
  std::vector<Cell> cells; // solution letters
  std::vector<CrosswordEntry> entries;
  std::vector<GridPos> solutionCells;
  bool operator==(const Crossword &) const = default;
};

struct Choice {
  std::vector<std::string> options;
  std::size_t correctIndex = 0;
  bool operator==(const Choice &) const = default;
};

struct DropDownList {
  std::vector<std::variant<std::string, Choice>> segments;
  bool operator==(const DropDownList &) const = default;
};

/// `pairing[i]` is the partner card of card i.
struct Memory {
  std::vector<Item> cards;
  std::vector<std::size_t> pairing;
  bool operator==(const Memory &) const = default;
};

struct TextSelection {
  std::vector<std::string> tokens;
  std::set<std::size_t> correctTokens;
  bool operator==(const TextSelection &) const = default;
};

struct Clip {
  std::string textFragmentId;
  double clipBegin = 0; // seconds
  double clipEnd = 0;
  std::optional<std::string> text; // emitted into the page when present
  bool operator==(const Clip &) const = default;
};

struct MediaOverlay {
  MediaRef audio;
  std::vector<Clip> clips;
  bool operator==(const MediaOverlay &) const = default;
};

} // namespace task

using TaskSpec = std::variant<task::PairAssignment, task::GroupAssignment, task::OrderAssignment,
                              task::DragDropImage, task::Cloze, task::Dictation, task::MultipleChoice,
                              task::TextQuiz, task::Crossword, task::DropDownList, task::Memory,
                              task::TextSelection, task::MediaOverlay>;

ExerciseKind kind_of(const TaskSpec &task);

/// Number of graded items, i.e. the length of GradeResult::perItem.
std::size_t item_count(const TaskSpec &task);

/// Every MediaRef reachable from the task, in field order.
std::vector<MediaRef> media_refs(const TaskSpec &task);

struct ExerciseDefinition {
  std::string id;
  ExerciseKind kind = ExerciseKind::MultipleChoice;
  std::vector<TaskSpec> tasks;
  ExerciseMeta meta;
  std::optional<std::string> uiLanguage;

  bool operator==(const ExerciseDefinition &) const = default;
};

using DefinitionMap = std::map<std::string, ExerciseDefinition>;

std::vector<MediaRef> media_refs(const ExerciseDefinition &def);

namespace response {

/// `slots[left]` is the displayed right-column slot chosen for that left item.
struct PairAssignment {
  std::vector<std::optional<std::size_t>> slots;
  bool operator==(const PairAssignment &) const = default;
};

/// Group index per member, members flattened group by group.
struct GroupAssignment {
  std::vector<std::optional<std::size_t>> groups;
  bool operator==(const GroupAssignment &) const = default;
};

/// `order[position]` is the item index placed at that position.
struct OrderAssignment {
  std::vector<std::optional<std::size_t>> order;
  bool operator==(const OrderAssignment &) const = default;
};

struct DragDropImage {
  std::vector<std::optional<Point>> drops;
  bool operator==(const DragDropImage &) const = default;
};

struct Cloze {
  std::vector<std::optional<std::string>> gaps;
  bool operator==(const Cloze &) const = default;
};

struct Dictation {
  std::optional<std::string> text;
  bool operator==(const Dictation &) const = default;
};

struct MultipleChoice {
  std::set<std::size_t> selected;
  bool operator==(const MultipleChoice &) const = default;
};

struct TextQuiz {
  std::optional<std::string> text;
  bool operator==(const TextQuiz &) const = default;
};

/// One entry per task cell, aligned with task::Crossword::cells.
struct Crossword {
  std::vector<std::optional<std::string>> letters;
  bool operator==(const Crossword &) const = default;
};

struct DropDownList {
  std::vector<std::optional<std::size_t>> choices;
  bool operator==(const DropDownList &) const = default;
};

struct Memory {
  std::vector<std::pair<std::size_t, std::size_t>> matches;
  bool operator==(const Memory &) const = default;
};

struct TextSelection {
  std::set<std::size_t> selected;
  bool operator==(const TextSelection &) const = default;
};

} // namespace response

using Response = std::variant<response::PairAssignment, response::GroupAssignment, response::OrderAssignment,
                              response::DragDropImage, response::Cloze, response::Dictation,
                              response::MultipleChoice, response::TextQuiz, response::Crossword,
                              response::DropDownList, response::Memory, response::TextSelection>;

ExerciseKind kind_of(const Response &response);

/// Reduced non-negative fraction.
class Score {
public:
  Score() = default;
  Score(std::int64_t num, std::int64_t den);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
  bool is_one() const noexcept { return num_ == den_; }

  bool operator==(const Score &) const = default;
  std::strong_ordering operator<=>(const Score &other) const;

private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

enum class ItemVerdict { Correct, Incorrect, Unanswered };

std::string_view verdict_name(ItemVerdict v);

struct GradeResult {
  bool correct = false;
  Score score;
  std::vector<ItemVerdict> perItem;
  std::optional<std::string> sampleSolution;

  bool operator==(const GradeResult &) const = default;
};

} // namespace exbook::model

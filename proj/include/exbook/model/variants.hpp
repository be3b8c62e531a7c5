#pragma once

#include <exbook/model/types.hpp>

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace exbook::model {

/// Seeded source of indices. Bounded draws use rejection on top of
/// mt19937_64, whose output sequence is fixed by the standard, so a seed
/// produces the same shuffle on every platform.
class SeededRng {
public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound). `bound` must be positive.
  std::uint64_t below(std::uint64_t bound);

  /// Fisher-Yates permutation of 0..n-1.
  std::vector<std::size_t> permutation(std::size_t n);

  template <class T> void shuffle(std::vector<T> &values) {
    for(std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[below(i)]);
    }
  }

private:
  std::mt19937_64 engine_;
};

/// Builds the "solution grabbing" variant of a cloze: every gap becomes a
/// drop-down whose options are the gap's first accepted answer plus up to
/// `distractorsPerGap` accepted answers of other gaps, in seeded order.
/// Throws Error(NotACloze).
TaskSpec derive_dropdown_variant(const TaskSpec &cloze, std::size_t distractorsPerGap, std::uint64_t seed);

/// Display permutation produced by shuffle_presentation.
/// `newToOld[j]` is the original index of the item now shown at position j.
class IndexRemap {
public:
  IndexRemap() = default;
  IndexRemap(ExerciseKind kind, std::vector<std::size_t> newToOld);

  ExerciseKind kind() const noexcept { return kind_; }
  const std::vector<std::size_t> &new_to_old() const noexcept { return newToOld_; }
  std::size_t to_new(std::size_t oldIndex) const { return oldToNew_.at(oldIndex); }

  /// Re-expresses a response given against the original task for the shuffled task.
  Response apply(const Response &original) const;

  /// Puts per-item feedback from the shuffled task back in original item order.
  GradeResult restore(const GradeResult &shuffled) const;

private:
  ExerciseKind kind_ = ExerciseKind::MultipleChoice;
  std::vector<std::size_t> newToOld_;
  std::vector<std::size_t> oldToNew_;
};

/// Permutes the display items of MultipleChoice answers, Memory cards or the
/// PairAssignment right column. Throws Error(NotShuffleable) for other kinds.
std::pair<TaskSpec, IndexRemap> shuffle_presentation(const TaskSpec &task, std::uint64_t seed);

/// Applies an explicit permutation instead of a seeded one.
std::pair<TaskSpec, IndexRemap> permute_presentation(const TaskSpec &task, const std::vector<std::size_t> &newToOld);

} // namespace exbook::model

#include <exbook/error.hpp>
#include <exbook/model/normalize.hpp>
#include <exbook/model/variants.hpp>

#include <fmt/format.h>

#include <algorithm>
#include <limits>
#include <set>

namespace exbook::model {

std::uint64_t SeededRng::below(std::uint64_t bound) {
  const auto max = std::numeric_limits<std::uint64_t>::max();
  const auto limit = max - max % bound;
  for(;;) {
    const auto v = engine_();
    if(v < limit) {
      return v % bound;
    }
  }
}

std::vector<std::size_t> SeededRng::permutation(std::size_t n) {
  std::vector<std::size_t> p(n);
  for(std::size_t i = 0; i < n; ++i) {
    p[i] = i;
  }
  shuffle(p);
  return p;
}

TaskSpec derive_dropdown_variant(const TaskSpec &cloze, std::size_t distractorsPerGap, std::uint64_t seed) {
  const auto *source = std::get_if<task::Cloze>(&cloze);
  if(!source) {
    throw Error(ErrorCode::NotACloze, fmt::format("cannot derive a drop-down list from {}", kind_name(kind_of(cloze))));
  }
  std::vector<const task::Gap *> gaps;
  for(const auto &s : source->segments) {
    if(const auto *g = std::get_if<task::Gap>(&s)) {
      gaps.push_back(g);
    }
  }

  SeededRng rng(seed);
  task::DropDownList out;
  std::size_t gapIndex = 0;
  for(const auto &s : source->segments) {
    if(const auto *literal = std::get_if<std::string>(&s)) {
      out.segments.emplace_back(*literal);
      continue;
    }
    const auto &gap = *gaps[gapIndex];
    if(gap.accepted.empty()) {
      throw Error(ErrorCode::ValidationFailed, fmt::format("gap {} has no accepted answer", gapIndex));
    }
    const auto &answer = gap.accepted.front();
    const auto key = normalize_text(answer, gap.policy);

    // Candidates: other gaps' accepted answers, deduplicated and sorted so the
    // draw depends only on the seed. Anything equal to this gap's answer under
    // its policy is excluded.
    std::set<std::string> pool;
    for(std::size_t other = 0; other < gaps.size(); ++other) {
      if(other == gapIndex) {
        continue;
      }
      for(const auto &candidate : gaps[other]->accepted) {
        if(normalize_text(candidate, gap.policy) != key) {
          pool.insert(candidate);
        }
      }
    }
    std::vector<std::string> candidates(pool.begin(), pool.end());
    const auto take = std::min(distractorsPerGap, candidates.size());
    for(std::size_t i = 0; i < take; ++i) {
      std::swap(candidates[i], candidates[i + rng.below(candidates.size() - i)]);
    }

    task::Choice choice;
    choice.options.push_back(answer);
    choice.options.insert(choice.options.end(), candidates.begin(), candidates.begin() + static_cast<std::ptrdiff_t>(take));
    rng.shuffle(choice.options);
    choice.correctIndex = static_cast<std::size_t>(
        std::find(choice.options.begin(), choice.options.end(), answer) - choice.options.begin());
    out.segments.emplace_back(std::move(choice));
    ++gapIndex;
  }
  return out;
}

IndexRemap::IndexRemap(ExerciseKind kind, std::vector<std::size_t> newToOld)
    : kind_(kind), newToOld_(std::move(newToOld)), oldToNew_(newToOld_.size(), newToOld_.size()) {
  for(std::size_t j = 0; j < newToOld_.size(); ++j) {
    const auto old = newToOld_[j];
    if(old >= oldToNew_.size() || oldToNew_[old] != oldToNew_.size()) {
      throw Error(ErrorCode::ShapeMismatch, "display order is not a permutation");
    }
    oldToNew_[old] = j;
  }
}

Response IndexRemap::apply(const Response &original) const {
  if(kind_of(original) != kind_) {
    throw Error(ErrorCode::KindMismatch, "response kind does not match the remap");
  }
  auto mapped = original;
  if(auto *mc = std::get_if<response::MultipleChoice>(&mapped)) {
    std::set<std::size_t> selected;
    for(auto s : mc->selected) {
      selected.insert(s < oldToNew_.size() ? oldToNew_[s] : s);
    }
    mc->selected = std::move(selected);
  } else if(auto *mem = std::get_if<response::Memory>(&mapped)) {
    for(auto &[a, b] : mem->matches) {
      a = a < oldToNew_.size() ? oldToNew_[a] : a;
      b = b < oldToNew_.size() ? oldToNew_[b] : b;
    }
  } else if(auto *pairs = std::get_if<response::PairAssignment>(&mapped)) {
    for(auto &slot : pairs->slots) {
      if(slot && *slot < oldToNew_.size()) {
        slot = oldToNew_[*slot];
      }
    }
  }
  return mapped;
}

GradeResult IndexRemap::restore(const GradeResult &shuffled) const {
  if(kind_ == ExerciseKind::PairAssignment) {
    return shuffled; // feedback is per left item, which never moves
  }
  auto result = shuffled;
  for(std::size_t j = 0; j < newToOld_.size() && j < shuffled.perItem.size(); ++j) {
    result.perItem[newToOld_[j]] = shuffled.perItem[j];
  }
  return result;
}

std::pair<TaskSpec, IndexRemap> permute_presentation(const TaskSpec &task, const std::vector<std::size_t> &newToOld) {
  const auto kind = kind_of(task);
  if(!is_shuffleable(kind)) {
    throw Error(ErrorCode::NotShuffleable, fmt::format("{} has no reorderable display items", kind_name(kind)));
  }
  if(newToOld.size() != item_count(task)) {
    throw Error(ErrorCode::ShapeMismatch, "permutation length differs from the item count");
  }
  IndexRemap remap(kind, newToOld);
  TaskSpec shuffled = task;

  if(auto *mc = std::get_if<task::MultipleChoice>(&shuffled)) {
    const auto &orig = std::get<task::MultipleChoice>(task);
    std::set<std::size_t> correct;
    for(std::size_t j = 0; j < newToOld.size(); ++j) {
      mc->answers[j] = orig.answers[newToOld[j]];
      if(orig.correctAnswers.contains(newToOld[j])) {
        correct.insert(j);
      }
    }
    mc->correctAnswers = std::move(correct);
  } else if(auto *mem = std::get_if<task::Memory>(&shuffled)) {
    const auto &orig = std::get<task::Memory>(task);
    for(std::size_t j = 0; j < newToOld.size(); ++j) {
      mem->cards[j] = orig.cards[newToOld[j]];
      mem->pairing[j] = remap.to_new(orig.pairing[newToOld[j]]);
    }
  } else if(auto *pa = std::get_if<task::PairAssignment>(&shuffled)) {
    const auto &orig = std::get<task::PairAssignment>(task);
    pa->rightOrder.resize(newToOld.size());
    for(std::size_t j = 0; j < newToOld.size(); ++j) {
      const auto oldSlot = newToOld[j];
      pa->rightOrder[j] = orig.rightOrder.empty() ? oldSlot : orig.rightOrder[oldSlot];
    }
  }
  return {std::move(shuffled), std::move(remap)};
}

std::pair<TaskSpec, IndexRemap> shuffle_presentation(const TaskSpec &task, std::uint64_t seed) {
  const auto kind = kind_of(task);
  if(!is_shuffleable(kind)) {
    throw Error(ErrorCode::NotShuffleable, fmt::format("{} has no reorderable display items", kind_name(kind)));
  }
  SeededRng rng(seed);
  return permute_presentation(task, rng.permutation(item_count(task)));
}

} // namespace exbook::model

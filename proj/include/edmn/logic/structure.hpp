#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edmn/logic/vocabulary.hpp"

namespace edmn::logic {

// A total assignment of values to every symbol of a vocabulary (a possible
// world). Propositions hold 0 (false) or 1 (true).
class Structure {
 public:
  Structure(VocabularyPtr vocabulary, std::vector<ValueIndex> values);

  const Vocabulary& vocabulary() const noexcept { return *vocabulary_; }
  const VocabularyPtr& vocabulary_ptr() const noexcept { return vocabulary_; }
  std::span<const ValueIndex> values() const noexcept { return values_; }

  ValueIndex value(std::size_t symbol) const { return values_.at(symbol); }
  ValueIndex value_of(std::string_view symbol) const;
  const std::string value_name_of(std::string_view symbol) const;

  // "{gen = Male, mar = Single}"
  std::string to_string() const;
  // "(Male,Single)", the tuple label used by utility grids.
  std::string label() const;

  bool operator==(const Structure& other) const { return values_ == other.values_; }
  std::strong_ordering operator<=>(const Structure& other) const {
    return values_ <=> other.values_;
  }

 private:
  VocabularyPtr vocabulary_;
  std::vector<ValueIndex> values_;
};

// A set of structures over one vocabulary, kept sorted and duplicate-free.
// Empty means inconsistent knowledge; a singleton is complete knowledge.
class EpistemicState {
 public:
  explicit EpistemicState(VocabularyPtr vocabulary) : vocabulary_(std::move(vocabulary)) {}
  EpistemicState(VocabularyPtr vocabulary, std::vector<Structure> worlds);

  const Vocabulary& vocabulary() const noexcept { return *vocabulary_; }
  const VocabularyPtr& vocabulary_ptr() const noexcept { return vocabulary_; }
  const std::vector<Structure>& worlds() const noexcept { return worlds_; }
  std::size_t size() const noexcept { return worlds_.size(); }
  bool empty() const noexcept { return worlds_.empty(); }
  bool contains(const Structure& s) const;

  // c^E: the sorted values a symbol takes across the worlds.
  std::vector<ValueIndex> projection(std::size_t symbol) const;
  // True when the state equals the product of its per-symbol projections.
  bool is_rectangular() const;
  // Whether every world here is also in `other`.
  bool subset_of(const EpistemicState& other) const;

  std::string to_string() const;

  bool operator==(const EpistemicState& other) const { return worlds_ == other.worlds_; }
  std::strong_ordering operator<=>(const EpistemicState& other) const;

 private:
  VocabularyPtr vocabulary_;
  std::vector<Structure> worlds_;
};

}  // namespace edmn::logic

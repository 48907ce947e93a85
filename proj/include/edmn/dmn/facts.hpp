#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edmn/error.hpp"
#include "edmn/logic/formula.hpp"
#include "edmn/logic/structure.hpp"

namespace edmn::dmn {

using logic::ValueIndex;

// Per-variable knowledge: the set of values still possible for each
// restricted variable. Absent variables are unknown. Repeated knowledge about
// a variable intersects, so an empty set records contradictory input.
class FactSet {
 public:
  void know(const logic::Vocabulary& vocabulary, const std::string& variable,
            std::vector<ValueIndex> values);
  void know_value(const logic::Vocabulary& vocabulary, const std::string& variable,
                  std::string_view value);
  void forget(const std::string& variable) { restrictions_.erase(variable); }
  void clear() { restrictions_.clear(); }

  const std::map<std::string, std::vector<ValueIndex>>& restrictions() const noexcept {
    return restrictions_;
  }
  const std::vector<ValueIndex>* restriction(const std::string& variable) const;
  bool consistent() const;
  bool empty() const noexcept { return restrictions_.empty(); }

  // "gen = Male; gpa in {High, Fair}" in variable order.
  std::string to_string(const logic::Vocabulary& vocabulary) const;

  bool operator==(const FactSet&) const = default;

 private:
  std::map<std::string, std::vector<ValueIndex>> restrictions_;
};

// Facts text: one statement per line or separated by ';'.
//   gen = Male
//   gpa in {High, Fair}
// '#' starts a comment. Only variables in `allowed` may be mentioned.
FactSet parse_facts(std::string_view text, const logic::Vocabulary& vocabulary,
                    std::span<const std::string> allowed);

// The rectangular epistemic state over every symbol of `vocabulary`.
logic::EpistemicState facts_to_state(const FactSet& facts, const logic::VocabularyPtr& vocabulary,
                                     std::size_t cap = kDefaultEnumerationCap);

// A first-order theory whose models are facts_to_state(facts, vocabulary).
std::vector<logic::Formula> facts_to_formulas(const FactSet& facts,
                                              const logic::Vocabulary& vocabulary);

// Number of rectangular fact sets over the variables: prod (2^|domain| - 1),
// saturating.
std::size_t rectangular_count(const logic::Vocabulary& vocabulary,
                              std::span<const std::string> variables);

// Visits every rectangular fact set restricting exactly `variables`
// (each to a nonempty subset), first variable most significant, subsets by
// ascending bitmask over the domain.
void for_each_rectangular(const logic::Vocabulary& vocabulary,
                          std::span<const std::string> variables, std::size_t cap,
                          const std::function<void(const FactSet&)>& visit);

}  // namespace edmn::dmn

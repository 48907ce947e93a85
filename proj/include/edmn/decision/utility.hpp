#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edmn/decision/rational.hpp"
#include "edmn/error.hpp"
#include "edmn/logic/structure.hpp"

namespace edmn::decision {

using logic::EpistemicState;
using logic::Structure;
using logic::VocabularyPtr;

// Scores u(w, d) for every environment world w and every decision d in the
// decision set. Worlds are all structures of the environment vocabulary in
// enumeration order; decisions are kept in canonical (sorted) order.
class UtilityFunction {
 public:
  using Scorer = std::function<Rational(const Structure& world, const Structure& decision)>;

  UtilityFunction(VocabularyPtr environment, VocabularyPtr decisions_vocabulary,
                  std::vector<Structure> decisions, const Scorer& score,
                  std::size_t cap = kDefaultEnumerationCap);

  // Decision set = every structure of the decision vocabulary.
  UtilityFunction(VocabularyPtr environment, VocabularyPtr decisions_vocabulary,
                  const Scorer& score, std::size_t cap = kDefaultEnumerationCap);

  const VocabularyPtr& environment() const noexcept { return env_; }
  const VocabularyPtr& decision_vocabulary() const noexcept { return dec_; }
  const std::vector<Structure>& worlds() const noexcept { return worlds_; }
  const std::vector<Structure>& decisions() const noexcept { return decisions_; }

  std::optional<std::size_t> world_index(const Structure& world) const;
  std::optional<std::size_t> decision_index(const Structure& decision) const;

  const Rational& score(std::size_t world, std::size_t decision) const {
    return scores_[decision * worlds_.size() + world];
  }
  // Throws UtilityError for a world or decision outside the grid.
  const Rational& score(const Structure& world, const Structure& decision) const;

  // Same grid with every score mapped through `f`.
  UtilityFunction transformed(const std::function<Rational(const Rational&)>& f) const;

 private:
  UtilityFunction() = default;

  VocabularyPtr env_;
  VocabularyPtr dec_;
  std::vector<Structure> worlds_;
  std::vector<Structure> decisions_;
  std::vector<Rational> scores_;  // decision-major
};

enum class DecisionSet {
  Complete,  // every decision structure needs a row
  Rows,      // the decision set is whatever rows the CSV lists
};

// CSV grid: header `decision,(v1,v2),...` naming every environment world,
// then one row per decision with rational cells. Labels use value names in
// vocabulary declaration order; parentheses are optional for one variable.
// Errors ("incomplete utility", "missing decision row", "not a number") are
// UtilityError.
UtilityFunction load_utility(std::string_view csv, const VocabularyPtr& environment,
                             const VocabularyPtr& decisions,
                             DecisionSet mode = DecisionSet::Complete,
                             std::size_t cap = kDefaultEnumerationCap);

// Parses "(Male,Single)" or "Male" against a vocabulary's symbols.
std::optional<Structure> parse_label(std::string_view label, const VocabularyPtr& vocabulary);

// Inverse of load_utility, in grid order.
std::string render_utility(const UtilityFunction& u);

}  // namespace edmn::decision

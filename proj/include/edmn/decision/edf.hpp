#pragma once

#include <map>
#include <optional>
#include <string>

#include "edmn/decision/criterion.hpp"
#include "edmn/dmn/table.hpp"

namespace edmn::decision {

// Partial map from nonempty epistemic states over the environment
// vocabulary to total decision structures.
class EpistemicDecisionFunction {
 public:
  EpistemicDecisionFunction(VocabularyPtr environment, VocabularyPtr decisions);

  const VocabularyPtr& environment() const noexcept { return env_; }
  const VocabularyPtr& decision_vocabulary() const noexcept { return dec_; }
  const std::map<EpistemicState, Structure>& mapping() const noexcept { return mapping_; }
  std::size_t size() const noexcept { return mapping_.size(); }
  bool empty() const noexcept { return mapping_.empty(); }

  // Replaces any existing entry. Throws ModelError on an empty key or a
  // vocabulary mismatch.
  void set(EpistemicState state, Structure decision);
  std::optional<Structure> at(const EpistemicState& state) const;

  std::string to_string() const;

  bool operator==(const EpistemicDecisionFunction& other) const {
    return mapping_ == other.mapping_;
  }

 private:
  VocabularyPtr env_;
  VocabularyPtr dec_;
  std::map<EpistemicState, Structure> mapping_;
};

// Classical reading of a table: defined exactly on the singleton states whose
// world classically yields a value.
EpistemicDecisionFunction induced_edf(const dmn::DecisionTable& table,
                                      std::size_t cap = kDefaultEnumerationCap);

// Optimal-decision function: defined on every nonempty state where the
// criterion picks a unique decision. There are 2^|worlds| - 1 states, all
// counted against `cap`.
EpistemicDecisionFunction induced_edf(const UtilityFunction& u, const Criterion& criterion,
                                      std::size_t cap = kDefaultEnumerationCap);

}  // namespace edmn::decision

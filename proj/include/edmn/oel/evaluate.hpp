#pragma once

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edmn/error.hpp"
#include "edmn/logic/structure.hpp"
#include "edmn/oel/theory.hpp"

namespace edmn::oel {

using logic::EpistemicState;
using logic::Structure;

// Truth values for K nodes, keyed by (theory id, sub-formula).
class KValuation {
 public:
  void set(const std::string& theory, const Formula& psi, bool value);
  // `knode` must be a K node.
  void set(const Formula& knode, bool value);
  std::optional<bool> get(const std::string& theory, const Formula& psi) const;
  std::size_t size() const noexcept { return values_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, bool> values_;
};

// Truth of an epistemic formula: K nodes come from the valuation, objective
// atoms from `s`. `s` may be null when every atom is K-guarded.
bool eval_epistemic(const Formula& f, const KValuation& valuation, const Structure* s = nullptr);

// K against a lower model set: psi holds in every world (vacuously true on
// the empty set).
bool k_query(const EpistemicState& lower_models, const Formula& psi);

// Resolves every K node of the given formulas against the model set of the
// theory it names.
KValuation resolve_knowledge(
    std::span<const Formula> formulas,
    const std::function<const EpistemicState&(const std::string& theory)>& models_for);

struct Assignment {
  std::string symbol;
  std::string value;  // "true"/"false" for propositions

  bool operator==(const Assignment&) const = default;
};

struct DefinitionResult {
  enum class Status { Defined, Undefined, Overdefined };
  Status status = Status::Defined;
  std::vector<Assignment> assignment;  // complete when Defined
  std::string symbol;                  // offending symbol otherwise
  std::vector<std::string> values;     // conflicting head values (Overdefined)
  std::vector<std::size_t> fired;      // indices of rules whose body held

  bool defined() const noexcept { return status == Status::Defined; }
  std::string to_string() const;
};

// Completion-style evaluation of a non-recursive definition: each defined
// constant takes the unique value among fired heads. Agreeing duplicates are
// fine; no fired rule is Undefined; disagreement is Overdefined. A defined
// proposition is true iff some rule for it fires.
DefinitionResult eval_definition(const Definition& definition, const KValuation& valuation,
                                 const Structure* s = nullptr);

struct TheoryOutcome {
  std::string theory;
  bool constraints_hold = true;
  std::vector<DefinitionResult> definitions;

  bool satisfied() const;
};

struct OelResult {
  bool inconsistent_bottom = false;
  // Models projected onto the symbols defined by the higher theories.
  EpistemicState models;
  std::vector<TheoryOutcome> outcomes;  // in evaluation order, up to the first failure
  std::size_t bottom_models = 0;

  explicit OelResult(logic::VocabularyPtr decision_vocabulary)
      : models(std::move(decision_vocabulary)) {}
};

// Mod(T_1, ..., T_n): bottom theory plus extra facts by enumeration, then each
// higher (ebd) theory in stratification order with K resolved against the
// cumulative models of the referenced theory. Throws TheoryError on a
// stratification or fragment violation.
OelResult models_of_oel(const TheorySequence& sequence, std::span<const Formula> bottom_facts,
                        std::size_t cap = kDefaultEnumerationCap);

}  // namespace edmn::oel

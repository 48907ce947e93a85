#pragma once

#include <string>
#include <vector>

#include "edmn/dmn/facts.hpp"
#include "edmn/dmn/table.hpp"
#include "edmn/logic/structure.hpp"
#include "edmn/oel/theory.hpp"

namespace edmn::dmn {

struct DecisionResult {
  enum class Kind { Value, Undefined, Inconsistent, HitPolicyViolation };
  Kind kind = Kind::Undefined;
  std::string value;                     // Value only
  std::vector<std::size_t> fired_rows;   // 0-based, ascending
  std::vector<std::string> conflicting;  // distinct values of fired rows on a violation
  std::size_t state_size = 0;            // worlds in the evaluated epistemic state
  std::string diagnostic;

  bool is_value() const noexcept { return kind == Kind::Value; }
  std::string to_string() const;
  bool operator==(const DecisionResult&) const = default;
};

std::string to_string(DecisionResult::Kind kind);

// Evaluates one table against epistemic states. Translation to the ebd
// theory happens once; each state resolves the K nodes by k_query and
// evaluates the definition.
class TableEvaluator {
 public:
  explicit TableEvaluator(const DecisionTable& table);

  const DecisionTable& table() const noexcept { return *table_; }
  const oel::Theory& theory() const noexcept { return theory_; }
  // Vocabulary of the table's distinct input variables.
  const logic::VocabularyPtr& input_vocabulary() const noexcept { return inputs_; }

  // `state` must range over input_vocabulary().
  DecisionResult evaluate(const logic::EpistemicState& state) const;
  DecisionResult evaluate(const FactSet& facts, std::size_t cap = kDefaultEnumerationCap) const;

 private:
  const DecisionTable* table_;
  oel::Theory theory_;
  logic::VocabularyPtr inputs_;
};

// Epistemic decision: Value, Undefined (no row fired), Inconsistent (facts
// admit no world) or HitPolicyViolation (Any: fired rows disagree; Unique:
// more than one row fired).
DecisionResult decide(const DecisionTable& table, const FactSet& facts,
                      std::size_t cap = kDefaultEnumerationCap);

// Classical DMN row matching in one exactly known world.
DecisionResult classical_decide(const DecisionTable& table, const logic::Structure& world);

struct CheckEntry {
  FactSet facts;
  DecisionResult result;
};

// Every rectangular state of the inputs whose decision is not a Value, in
// canonical order. Empty means complete and conflict-free.
std::vector<CheckEntry> check_table(const DecisionTable& table,
                                    std::size_t cap = kDefaultEnumerationCap);

}  // namespace edmn::dmn

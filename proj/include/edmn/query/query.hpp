#pragma once

#include <string>
#include <utility>
#include <vector>

#include "edmn/dmn/decide.hpp"
#include "edmn/dmn/facts.hpp"
#include "edmn/dmn/table.hpp"

namespace edmn::query {

using dmn::DecisionResult;
using dmn::DecisionTable;
using dmn::FactSet;
using logic::ValueIndex;

// The values still considered possible for each input variable of a table.
// More values means more ignorance.
struct KnowledgeProfile {
  std::vector<std::string> variables;
  std::vector<std::vector<ValueIndex>> possible;  // nonempty, ascending

  // Every variable restricted, including those left at their full domain.
  static KnowledgeProfile from_facts(const logic::Vocabulary& vocabulary,
                                     const std::vector<std::string>& variables,
                                     const FactSet& facts);
  // Facts restricting only variables that are not at their full domain.
  FactSet to_facts(const logic::Vocabulary& vocabulary) const;

  // Pointwise superset: this profile is at least as ignorant as `other`.
  bool covers(const KnowledgeProfile& other) const;

  // "gen={Male}, mar={Single,Married}"
  std::string to_string(const logic::Vocabulary& vocabulary) const;

  bool operator==(const KnowledgeProfile&) const = default;
};

struct DecisionMapEntry {
  KnowledgeProfile profile;
  DecisionResult result;
};

// The table's decision on every rectangular state of its inputs, in
// canonical order.
std::vector<DecisionMapEntry> enumerate_decision_map(const DecisionTable& table,
                                                     std::size_t cap = kDefaultEnumerationCap);

// Maximally ignorant profiles whose state decides `target`: an antichain
// under covers(). Empty when no state yields the target. Throws ModelError
// when the target is not in the output sort.
std::vector<KnowledgeProfile> minimal_knowledge(const DecisionTable& table,
                                                const std::string& target,
                                                std::size_t cap = kDefaultEnumerationCap);

struct CellStatus {
  std::size_t column = 0;
  std::string cell;  // rendered cell
  bool holds = false;
};

struct FiredRow {
  std::size_t row = 0;  // 0-based
  std::vector<CellStatus> cells;
};

struct BlockedRow {
  std::size_t row = 0;
  CellStatus failing;  // first cell whose constraint does not hold
};

struct Explanation {
  std::vector<FiredRow> fired;
  std::vector<BlockedRow> blocked;
};

// Decision plus per-row status. Inconsistent facts give an empty explanation.
std::pair<DecisionResult, Explanation> explain(const DecisionTable& table, const FactSet& facts,
                                               std::size_t cap = kDefaultEnumerationCap);

}  // namespace edmn::query

#include "edmn/dmn/decide.hpp"

#include <algorithm>

#include "edmn/dmn/translate.hpp"
#include "edmn/oel/evaluate.hpp"

namespace edmn::dmn {

using Kind = DecisionResult::Kind;

std::string to_string(DecisionResult::Kind kind) {
  switch (kind) {
    case Kind::Value: return "value";
    case Kind::Undefined: return "undefined";
    case Kind::Inconsistent: return "inconsistent";
    case Kind::HitPolicyViolation: return "hit-policy-violation";
  }
  return "?";
}

std::string DecisionResult::to_string() const {
  switch (kind) {
    case Kind::Value: return value;
    case Kind::Undefined: return "undefined";
    case Kind::Inconsistent: return "inconsistent";
    case Kind::HitPolicyViolation: {
      std::string out = "hit policy violation (";
      for (std::size_t i = 0; i < conflicting.size(); ++i) out += (i ? ", " : "") + conflicting[i];
      return out + ")";
    }
  }
  return {};
}

namespace {

// Applies the hit policy to the fired rows of a table.
DecisionResult settle(const DecisionTable& table, std::vector<std::size_t> fired,
                      std::size_t state_size) {
  DecisionResult result;
  result.state_size = state_size;
  result.fired_rows = std::move(fired);
  std::vector<std::string> values;
  for (auto r : result.fired_rows) {
    const auto& v = table.rows()[r].output;
    if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
  }
  if (values.empty()) {
    result.kind = Kind::Undefined;
    result.diagnostic = "no row fired";
  } else if (values.size() > 1) {
    result.kind = Kind::HitPolicyViolation;
    result.conflicting = std::move(values);
    result.diagnostic = "fired rows assign different values";
  } else if (table.hit_policy() == HitPolicy::Unique && result.fired_rows.size() > 1) {
    result.kind = Kind::HitPolicyViolation;
    result.conflicting = std::move(values);
    result.diagnostic = "unique hit policy: more than one row fired";
  } else {
    result.kind = Kind::Value;
    result.value = values.front();
  }
  return result;
}

}  // namespace

TableEvaluator::TableEvaluator(const DecisionTable& table)
    : table_(&table),
      theory_(translate_table(table)),
      inputs_(table.vocabulary()->restrict_to(table.input_variables())) {}

DecisionResult TableEvaluator::evaluate(const logic::EpistemicState& state) const {
  if (state.empty()) {
    DecisionResult result;
    result.kind = Kind::Inconsistent;
    result.diagnostic = "facts admit no world";
    return result;
  }
  const auto& definition = theory_.definitions.front();
  std::vector<Formula> bodies;
  for (const auto& r : definition.rules()) bodies.push_back(r.body);
  auto valuation = oel::resolve_knowledge(
      bodies, [&](const std::string&) -> const logic::EpistemicState& { return state; });
  auto outcome = oel::eval_definition(definition, valuation);
  // The definition's verdict and the hit policy agree on Any; settle() also
  // applies Unique.
  auto result = settle(*table_, outcome.fired, state.size());
  if (outcome.status == oel::DefinitionResult::Status::Overdefined)
    result.kind = Kind::HitPolicyViolation;
  return result;
}

DecisionResult TableEvaluator::evaluate(const FactSet& facts, std::size_t cap) const {
  if (!facts.consistent()) {
    DecisionResult result;
    result.kind = Kind::Inconsistent;
    result.diagnostic = "contradictory facts";
    return result;
  }
  return evaluate(facts_to_state(facts, inputs_, cap));
}

DecisionResult decide(const DecisionTable& table, const FactSet& facts, std::size_t cap) {
  return TableEvaluator(table).evaluate(facts, cap);
}

DecisionResult classical_decide(const DecisionTable& table, const logic::Structure& world) {
  std::vector<std::size_t> fired;
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    const auto& row = table.rows()[r];
    bool match = true;
    for (std::size_t c = 0; c < row.cells.size() && match; ++c) {
      auto v = world.value_of(table.inputs()[c]);
      match = classical_match(row.cells[c], table.input_sort(c), v);
    }
    if (match) fired.push_back(r);
  }
  return settle(table, std::move(fired), 1);
}

std::vector<CheckEntry> check_table(const DecisionTable& table, std::size_t cap) {
  TableEvaluator evaluator(table);
  std::vector<CheckEntry> report;
  auto variables = table.input_variables();
  for_each_rectangular(*table.vocabulary(), variables, cap, [&](const FactSet& facts) {
    auto result = evaluator.evaluate(facts, cap);
    if (!result.is_value()) report.push_back({facts, std::move(result)});
  });
  return report;
}

}  // namespace edmn::dmn

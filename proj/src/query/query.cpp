#include "edmn/query/query.hpp"

#include <algorithm>

#include "edmn/oel/evaluate.hpp"

namespace edmn::query {

KnowledgeProfile KnowledgeProfile::from_facts(const logic::Vocabulary& vocabulary,
                                              const std::vector<std::string>& variables,
                                              const FactSet& facts) {
  KnowledgeProfile p;
  p.variables = variables;
  for (const auto& var : variables) {
    if (const auto* r = facts.restriction(var)) {
      p.possible.push_back(*r);
    } else {
      std::vector<ValueIndex> all(vocabulary.domain_size(*vocabulary.find_symbol(var)));
      for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<ValueIndex>(i);
      p.possible.push_back(std::move(all));
    }
  }
  return p;
}

FactSet KnowledgeProfile::to_facts(const logic::Vocabulary& vocabulary) const {
  FactSet facts;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    if (possible[i].size() == vocabulary.domain_size(*vocabulary.find_symbol(variables[i])))
      continue;
    facts.know(vocabulary, variables[i], possible[i]);
  }
  return facts;
}

bool KnowledgeProfile::covers(const KnowledgeProfile& other) const {
  for (std::size_t i = 0; i < possible.size(); ++i)
    if (!std::includes(possible[i].begin(), possible[i].end(), other.possible[i].begin(),
                       other.possible[i].end()))
      return false;
  return true;
}

std::string KnowledgeProfile::to_string(const logic::Vocabulary& vocabulary) const {
  std::string out;
  for (std::size_t i = 0; i < variables.size(); ++i) {
    auto symbol = *vocabulary.find_symbol(variables[i]);
    out += (i ? ", " : "") + variables[i] + "={";
    for (std::size_t k = 0; k < possible[i].size(); ++k)
      out += (k ? "," : "") + vocabulary.value_name(symbol, possible[i][k]);
    out += "}";
  }
  return out;
}

std::vector<DecisionMapEntry> enumerate_decision_map(const DecisionTable& table,
                                                     std::size_t cap) {
  dmn::TableEvaluator evaluator(table);
  auto variables = table.input_variables();
  const auto& vocabulary = *table.vocabulary();
  std::vector<DecisionMapEntry> out;
  dmn::for_each_rectangular(vocabulary, variables, cap, [&](const FactSet& facts) {
    out.push_back({KnowledgeProfile::from_facts(vocabulary, variables, facts),
                   evaluator.evaluate(facts, cap)});
  });
  return out;
}

std::vector<KnowledgeProfile> minimal_knowledge(const DecisionTable& table,
                                                const std::string& target, std::size_t cap) {
  if (!table.output_sort().index_of(target))
    throw ModelError("target " + target + " is not a value of " + table.output_sort().name());
  std::vector<KnowledgeProfile> candidates;
  for (auto& entry : enumerate_decision_map(table, cap))
    if (entry.result.is_value() && entry.result.value == target)
      candidates.push_back(std::move(entry.profile));

  // No monotonicity is assumed: a candidate is kept unless another candidate
  // strictly covers it.
  std::vector<KnowledgeProfile> out;
  for (const auto& p : candidates) {
    bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const auto& q) {
      return !(q == p) && q.covers(p);
    });
    if (!dominated) out.push_back(p);
  }
  return out;
}

std::pair<DecisionResult, Explanation> explain(const DecisionTable& table, const FactSet& facts,
                                               std::size_t cap) {
  dmn::TableEvaluator evaluator(table);
  Explanation explanation;
  if (!facts.consistent()) return {evaluator.evaluate(facts, cap), explanation};
  auto state = dmn::facts_to_state(facts, evaluator.input_vocabulary(), cap);
  auto result = evaluator.evaluate(state);
  if (state.empty()) return {result, explanation};

  const auto& vocabulary = *table.vocabulary();
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    const auto& row = table.rows()[r];
    FiredRow fired{r, {}};
    std::optional<CellStatus> failing;
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      auto f = dmn::constraint_to_formula(row.cells[c], vocabulary, table.inputs()[c]);
      std::vector<logic::Formula> formulas{f};
      auto valuation = oel::resolve_knowledge(
          formulas, [&](const std::string&) -> const logic::EpistemicState& { return state; });
      CellStatus status{c, row.cells[c].to_string(), oel::eval_epistemic(f, valuation)};
      if (!status.holds && !failing) failing = status;
      fired.cells.push_back(std::move(status));
    }
    if (failing)
      explanation.blocked.push_back({r, *failing});
    else
      explanation.fired.push_back(std::move(fired));
  }
  return {result, explanation};
}

}  // namespace edmn::query

#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "edmn/decision/edf.hpp"
#include "edmn/dmn/facts.hpp"
#include "edmn/dmn/table.hpp"
#include "edmn/logic/enumerate.hpp"
#include "edmn/logic/formula.hpp"
#include "edmn/oel/theory.hpp"

// Seeded random instances shared by the property tests and the acceptance suite.
namespace gen {

using edmn::logic::Formula;
using edmn::logic::ValueIndex;
using edmn::logic::VocabularyPtr;

inline int uniform(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(std::mt19937& rng, double p = 0.5) {
  return std::bernoulli_distribution(p)(rng);
}

// Environment constants x0.. over sorts S0.. (values a, b, c) and decision
// constants d0.. over sorts D0.. (values p, q, r), optionally one decision
// proposition `flag`.
struct RandomVocabulary {
  VocabularyPtr vocabulary;
  std::vector<std::string> environment;
  std::vector<std::string> decisions;
  VocabularyPtr environment_vocabulary() const { return vocabulary->restrict_to(environment); }
  VocabularyPtr decision_vocabulary() const { return vocabulary->restrict_to(decisions); }
};

inline RandomVocabulary random_vocabulary(std::mt19937& rng, int max_vars, int max_domain,
                                          int decision_count, int max_decision_domain,
                                          bool proposition = false, int min_domain = 1) {
  static const std::vector<std::string> env_values{"a", "b", "c", "d", "e"};
  static const std::vector<std::string> dec_values{"p", "q", "r", "s", "t"};
  using namespace edmn::logic;
  RandomVocabulary out;
  std::vector<SortDecl> sorts;
  std::vector<SymbolDecl> symbols;
  int vars = uniform(rng, 1, max_vars);
  for (int i = 0; i < vars; ++i) {
    int size = uniform(rng, min_domain, max_domain);
    std::string sort = "S" + std::to_string(i);
    sorts.push_back({sort, {env_values.begin(), env_values.begin() + size}, std::nullopt});
    std::string name = "x" + std::to_string(i);
    symbols.push_back({name, SymbolKind::Constant, sort});
    out.environment.push_back(name);
  }
  for (int i = 0; i < decision_count; ++i) {
    int size = uniform(rng, 2, max_decision_domain);
    std::string sort = "D" + std::to_string(i);
    sorts.push_back({sort, {dec_values.begin(), dec_values.begin() + size}, std::nullopt});
    std::string name = "d" + std::to_string(i);
    symbols.push_back({name, SymbolKind::Constant, sort});
    out.decisions.push_back(name);
  }
  if (proposition) {
    symbols.push_back({"flag", SymbolKind::Proposition, ""});
    out.decisions.push_back("flag");
  }
  out.vocabulary = Vocabulary::build(sorts, symbols);
  return out;
}

inline const edmn::logic::Sort& sort_of(const edmn::logic::Vocabulary& v, const std::string& name) {
  return v.sort_of(*v.find_symbol(name));
}

inline std::vector<ValueIndex> random_subset(std::mt19937& rng, std::size_t size, bool nonempty) {
  std::vector<ValueIndex> out;
  do {
    out.clear();
    for (ValueIndex i = 0; i < size; ++i)
      if (coin(rng)) out.push_back(i);
  } while (nonempty && out.empty());
  return out;
}

// K-free formula over the given constants.
inline Formula random_objective(std::mt19937& rng, const edmn::logic::Vocabulary& v,
                                const std::vector<std::string>& vars, int depth) {
  if (depth <= 0 || coin(rng, 0.4)) {
    const auto& var = vars[uniform(rng, 0, static_cast<int>(vars.size()) - 1)];
    const auto& sort = sort_of(v, var);
    if (coin(rng)) return Formula::equals(v, var, sort.value(uniform(rng, 0, static_cast<int>(sort.size()) - 1)));
    auto subset = random_subset(rng, sort.size(), false);
    return Formula::member(v, var, subset);
  }
  switch (uniform(rng, 0, 3)) {
    case 0:
      return Formula::negation(random_objective(rng, v, vars, depth - 1));
    case 1:
      return Formula::conjunction(
          {random_objective(rng, v, vars, depth - 1), random_objective(rng, v, vars, depth - 1)});
    case 2:
      return Formula::disjunction(
          {random_objective(rng, v, vars, depth - 1), random_objective(rng, v, vars, depth - 1)});
    default:
      return Formula::implication(random_objective(rng, v, vars, depth - 1),
                                  random_objective(rng, v, vars, depth - 1));
  }
}

// Fully epistemic formula: K[theory][objective] literals under boolean connectives.
inline Formula random_epistemic(std::mt19937& rng, const edmn::logic::Vocabulary& v,
                                const std::vector<std::string>& vars, const std::string& theory,
                                int depth) {
  if (depth <= 0 || coin(rng, 0.5)) {
    auto k = Formula::know(theory, random_objective(rng, v, vars, 2));
    return coin(rng, 0.35) ? Formula::negation(k) : k;
  }
  switch (uniform(rng, 0, 2)) {
    case 0:
      return Formula::negation(random_epistemic(rng, v, vars, theory, depth - 1));
    case 1:
      return Formula::conjunction({random_epistemic(rng, v, vars, theory, depth - 1),
                                   random_epistemic(rng, v, vars, theory, depth - 1)});
    default:
      return Formula::disjunction({random_epistemic(rng, v, vars, theory, depth - 1),
                                   random_epistemic(rng, v, vars, theory, depth - 1)});
  }
}

// [T_E, T_d] where T_d is one ebd definition of the decision symbols with up
// to `max_rules` rules and occasionally a K-guarded constraint.
inline edmn::oel::TheorySequence random_ebd_sequence(std::mt19937& rng, const RandomVocabulary& rv,
                                                     int max_rules) {
  using namespace edmn::oel;
  const auto& v = *rv.vocabulary;
  std::vector<Rule> rules;
  int count = uniform(rng, 0, max_rules);
  for (int i = 0; i < count; ++i) {
    const auto& head = rv.decisions[uniform(rng, 0, static_cast<int>(rv.decisions.size()) - 1)];
    RuleHead h{head, std::nullopt};
    auto index = *v.find_symbol(head);
    if (v.symbol(index).kind == edmn::logic::SymbolKind::Constant) {
      const auto& sort = v.sort_of(index);
      h.value = sort.value(uniform(rng, 0, static_cast<int>(sort.size()) - 1));
    }
    Formula body = coin(rng, 0.1) ? Formula::top() : random_epistemic(rng, v, rv.environment, "T_E", 2);
    rules.push_back({h, body, "rule " + std::to_string(i + 1)});
  }
  Theory top{"T_d", {}, {Definition(v, rv.decisions, std::move(rules))}};
  if (coin(rng, 0.15)) top.constraints.push_back(random_epistemic(rng, v, rv.environment, "T_E", 1));
  return TheorySequence(rv.vocabulary, {Theory{"T_E", {}, {}}, std::move(top)});
}

inline edmn::dmn::Cell random_cell(std::mt19937& rng, const edmn::logic::Sort& sort) {
  using edmn::dmn::Cell;
  using edmn::dmn::CompareOp;
  auto pick = [&]() { return sort.value(uniform(rng, 0, static_cast<int>(sort.size()) - 1)); };
  switch (uniform(rng, 0, 7)) {
    case 0:
    case 1:
      return Cell::any();
    case 2:
    case 3:
      return Cell::test(CompareOp::Eq, pick());
    case 4:
      return Cell::test(CompareOp::Ne, pick());
    case 5: {
      std::vector<std::string> values;
      for (auto i : random_subset(rng, sort.size(), true)) values.push_back(sort.value(i));
      return coin(rng) ? Cell::enumeration(values)
                       : Cell::either(Cell::test(CompareOp::Eq, pick()), Cell::test(CompareOp::Eq, pick()));
    }
    case 6:
      return Cell::not_known();
    default:
      return Cell::not_known_that(Cell::test(CompareOp::Eq, pick()));
  }
}

// Table deciding d0 from the environment constants; a variable may head
// two columns.
inline edmn::dmn::DecisionTable random_table(std::mt19937& rng, const RandomVocabulary& rv,
                                             int max_rows, edmn::dmn::HitPolicy policy) {
  using namespace edmn::dmn;
  std::vector<std::string> inputs = rv.environment;
  if (coin(rng, 0.2)) inputs.push_back(rv.environment[uniform(rng, 0, static_cast<int>(rv.environment.size()) - 1)]);
  const auto& out = sort_of(*rv.vocabulary, rv.decisions[0]);
  std::vector<Row> rows;
  int count = uniform(rng, 1, max_rows);
  for (int r = 0; r < count; ++r) {
    Row row;
    for (const auto& in : inputs) row.cells.push_back(random_cell(rng, sort_of(*rv.vocabulary, in)));
    row.output = out.value(uniform(rng, 0, static_cast<int>(out.size()) - 1));
    rows.push_back(std::move(row));
  }
  return DecisionTable(rv.vocabulary, "Random", policy, inputs, rv.decisions[0], std::move(rows));
}

// Partial map from rectangular states to decisions, each state kept with
// probability `density`.
inline edmn::decision::EpistemicDecisionFunction random_rectangular_edf(std::mt19937& rng,
                                                                        const RandomVocabulary& rv,
                                                                        double density) {
  using namespace edmn;
  auto env = rv.environment_vocabulary();
  auto dec = rv.decision_vocabulary();
  decision::EpistemicDecisionFunction f(env, dec);
  dmn::for_each_rectangular(*env, rv.environment, kDefaultEnumerationCap, [&](const dmn::FactSet& facts) {
    if (!coin(rng, density)) return;
    std::vector<ValueIndex> d;
    for (const auto& s : dec->symbols())
      d.push_back(static_cast<ValueIndex>(uniform(rng, 0, static_cast<int>(dec->domain_size(*dec->find_symbol(s.name))) - 1)));
    f.set(dmn::facts_to_state(facts, env), logic::Structure(dec, d));
  });
  return f;
}

}  // namespace gen

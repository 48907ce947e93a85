#include "edmn/decision/compile.hpp"

#include <set>

#include "edmn/dmn/translate.hpp"

namespace edmn::decision {

namespace {

using logic::Formula;
using logic::ValueIndex;
using Projections = std::vector<std::vector<ValueIndex>>;

Projections projections_of(const EpistemicState& state) {
  Projections out;
  for (std::size_t c = 0; c < state.vocabulary().symbols().size(); ++c)
    out.push_back(state.projection(c));
  return out;
}

// Validates the keys and returns their projections in key order.
std::vector<Projections> checked_projections(const EpistemicDecisionFunction& f,
                                             std::size_t cap) {
  const auto& env = *f.environment();
  if (env.structure_count() > cap)
    throw CapExceeded("environment worlds", env.structure_count(), cap);
  for (const auto& d : f.decision_vocabulary()->symbols())
    if (d.kind != logic::SymbolKind::Constant)
      throw CompileError("decision symbol " + d.name + " must be a constant");
  std::map<Projections, const EpistemicState*> seen;
  std::vector<Projections> out;
  for (const auto& [state, decision] : f.mapping()) {
    auto p = projections_of(state);
    auto [it, fresh] = seen.emplace(p, &state);
    if (!fresh)
      throw CompileError("keys " + it->second->to_string() + " and " + state.to_string() +
                         " have identical per-variable projections");
    out.push_back(std::move(p));
  }
  for (const auto& [state, decision] : f.mapping())
    if (!state.is_rectangular())
      throw CompileError("key " + state.to_string() +
                         " is not rectangular; per-variable knowledge cannot express it");
  return out;
}

Formula atom(const logic::Vocabulary& vocabulary, std::size_t symbol, ValueIndex v) {
  const auto& s = vocabulary.symbol(symbol);
  if (s.kind == logic::SymbolKind::Proposition) {
    auto p = Formula::prop(vocabulary, s.name);
    return v ? p : Formula::negation(p);
  }
  return Formula::equals(vocabulary, s.name, vocabulary.sort(s.sort).value(v));
}

}  // namespace

oel::TheorySequence compile_edf_to_oel(const EpistemicDecisionFunction& f, std::size_t cap) {
  auto projections = checked_projections(f, cap);
  auto vocabulary = f.environment()->merge(*f.decision_vocabulary());
  const auto& env = *f.environment();
  const auto& dec = *f.decision_vocabulary();

  std::vector<oel::Rule> rules;
  std::size_t key = 0;
  for (const auto& [state, decision] : f.mapping()) {
    const auto& p = projections[key++];
    std::vector<Formula> body;
    for (std::size_t c = 0; c < p.size(); ++c) {
      std::vector<Formula> alternatives;
      for (auto v : p[c]) alternatives.push_back(atom(env, c, v));
      body.push_back(Formula::know(dmn::kFactsTheory, Formula::disjunction(alternatives)));
    }
    for (std::size_t c = 0; c < p.size(); ++c) {
      if (p[c].size() < 2) continue;
      for (auto v : p[c])
        body.push_back(Formula::negation(
            Formula::know(dmn::kFactsTheory, Formula::negation(atom(env, c, v)))));
    }
    auto conjunction = Formula::conjunction(body);
    for (std::size_t d = 0; d < dec.symbols().size(); ++d)
      rules.push_back({{dec.symbol(d).name, dec.value_name(d, decision.value(d))},
                       conjunction,
                       "state " + state.to_string()});
  }

  std::vector<std::string> defined;
  for (const auto& d : dec.symbols()) defined.push_back(d.name);
  oel::Theory bottom{dmn::kFactsTheory, {}, {}};
  oel::Theory top{kDecisionTheory, {}, {oel::Definition(*vocabulary, defined, std::move(rules))}};
  return oel::TheorySequence(vocabulary, {std::move(bottom), std::move(top)});
}

dmn::DecisionTable compile_edf_to_edmn(const EpistemicDecisionFunction& f,
                                       const std::string& table_name, std::size_t cap) {
  const auto& env = *f.environment();
  const auto& dec = *f.decision_vocabulary();
  if (dec.symbols().size() != 1)
    throw CompileError("a decision table needs exactly one decision constant, got " +
                       std::to_string(dec.symbols().size()));
  for (const auto& c : env.symbols())
    if (c.kind != logic::SymbolKind::Constant)
      throw CompileError("table input " + c.name + " must be a constant");
  auto projections = checked_projections(f, cap);
  auto vocabulary = f.environment()->merge(dec);

  // Possibility columns: (variable, value) pairs pinned by some row.
  std::set<std::pair<std::size_t, ValueIndex>> pinned;
  for (const auto& p : projections)
    for (std::size_t c = 0; c < p.size(); ++c)
      if (p[c].size() >= 2)
        for (auto v : p[c]) pinned.emplace(c, v);

  std::vector<std::string> inputs;
  for (const auto& c : env.symbols()) inputs.push_back(c.name);
  for (const auto& [c, v] : pinned) inputs.push_back(env.symbol(c).name);

  std::vector<dmn::Row> rows;
  std::size_t key = 0;
  for (const auto& [state, decision] : f.mapping()) {
    const auto& p = projections[key++];
    dmn::Row row;
    for (std::size_t c = 0; c < p.size(); ++c) {
      const auto& sort = env.sort_of(c);
      if (p[c].size() == sort.size()) {
        row.cells.push_back(dmn::Cell::any());
        continue;
      }
      auto cell = dmn::Cell::test(dmn::CompareOp::Eq, sort.value(p[c].front()));
      for (std::size_t i = 1; i < p[c].size(); ++i)
        cell = dmn::Cell::either(std::move(cell),
                                 dmn::Cell::test(dmn::CompareOp::Eq, sort.value(p[c][i])));
      row.cells.push_back(std::move(cell));
    }
    for (const auto& [c, v] : pinned) {
      bool pin = p[c].size() >= 2 && std::binary_search(p[c].begin(), p[c].end(), v);
      row.cells.push_back(pin ? dmn::Cell::not_known_that(dmn::Cell::test(
                                    dmn::CompareOp::Ne, env.sort_of(c).value(v)))
                              : dmn::Cell::any());
    }
    row.output = dec.value_name(0, decision.value(0));
    rows.push_back(std::move(row));
  }
  return dmn::DecisionTable(vocabulary, table_name, dmn::HitPolicy::Any, std::move(inputs),
                            dec.symbol(0).name, std::move(rows));
}

}  // namespace edmn::decision

#include "edmn/dmn/translate.hpp"

namespace edmn::dmn {

oel::Theory translate_table(const DecisionTable& table, const std::string& facts_theory) {
  const auto& vocabulary = *table.vocabulary();
  std::vector<oel::Rule> rules;
  rules.reserve(table.rows().size());
  for (std::size_t r = 0; r < table.rows().size(); ++r) {
    const auto& row = table.rows()[r];
    std::vector<Formula> conjuncts;
    for (std::size_t c = 0; c < row.cells.size(); ++c) {
      if (row.cells[c].kind() == Cell::Kind::Any) continue;
      auto f = constraint_to_formula(row.cells[c], vocabulary, table.inputs()[c], facts_theory);
      // !K expands to a conjunction; splice it so bodies stay flat.
      if (f.kind() == Formula::Kind::And)
        conjuncts.insert(conjuncts.end(), f.children().begin(), f.children().end());
      else
        conjuncts.push_back(std::move(f));
    }
    rules.push_back({{table.output(), row.output}, Formula::conjunction(std::move(conjuncts)),
                     "row " + std::to_string(r + 1)});
  }
  oel::Theory theory;
  theory.id = table.name();
  theory.definitions.emplace_back(vocabulary, std::vector<std::string>{table.output()},
                                  std::move(rules));
  return theory;
}

}  // namespace edmn::dmn

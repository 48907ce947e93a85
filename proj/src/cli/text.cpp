#include "text.hpp"

#include <algorithm>

namespace edmn::cli {

using dmn::DecisionResult;
using dmn::DecisionTable;
using dmn::FactSet;
using dmn::Model;

// Facts over the table's inputs: environment facts as given, upstream
// decisions fixed to their derived values. Returns the result to report
// instead when some upstream decision is not a value.
std::optional<DecisionResult> table_facts(const Model& model, const DecisionTable& table,
                                          const FactSet& facts, std::size_t cap, FactSet& out) {
  out = facts;
  if (!facts.consistent()) return std::nullopt;
  std::optional<std::vector<dmn::DrdDecision>> upstream;
  for (const auto& var : table.input_variables()) {
    if (std::find(model.environment.begin(), model.environment.end(), var) !=
        model.environment.end())
      continue;
    if (!upstream) upstream = dmn::decide_drd(model.drd, facts, cap);
    for (const auto& d : *upstream) {
      if (d.variable != var) continue;
      if (d.result.is_value()) {
        out.know_value(*model.vocabulary, var, d.result.value);
      } else {
        DecisionResult blocked;
        blocked.kind = DecisionResult::Kind::Undefined;
        blocked.diagnostic = "upstream decision " + d.variable + " is not derived";
        return blocked;
      }
    }
  }
  return std::nullopt;
}

std::string describe(const DecisionResult& r) {
  switch (r.kind) {
    case DecisionResult::Kind::Value: return r.value;
    case DecisionResult::Kind::Undefined:
      return "undefined" + (r.diagnostic.empty() ? "" : " (" + r.diagnostic + ")");
    case DecisionResult::Kind::Inconsistent: return "inconsistent knowledge";
    case DecisionResult::Kind::HitPolicyViolation: {
      std::string rows;
      for (auto i : r.fired_rows) rows += (rows.empty() ? "" : ", ") + std::to_string(i + 1);
      return r.to_string() + ", rows " + rows;
    }
  }
  return {};
}

std::string decision_line(const std::string& variable, const DecisionResult& r) {
  return r.is_value() ? variable + " = " + r.value : variable + ": " + describe(r);
}

void print_decisions(std::ostream& out, const std::vector<dmn::DrdDecision>& decisions) {
  for (const auto& d : decisions) out << decision_line(d.variable, d.result) << "\n";
}

void print_explanation(std::ostream& out, const DecisionTable& table, const DecisionResult& result,
                       const query::Explanation& explanation) {
  out << decision_line(table.output(), result) << "\n";
  for (const auto& row : explanation.fired) {
    out << "fired: row " << row.row + 1;
    for (std::size_t i = 0; i < row.cells.size(); ++i)
      out << (i ? ", " : " (") << table.inputs()[row.cells[i].column] << ": "
          << row.cells[i].cell;
    out << (row.cells.empty() ? "" : ")") << "\n";
  }
  for (const auto& row : explanation.blocked)
    out << "blocked: row " << row.row + 1 << " at " << table.inputs()[row.failing.column] << ": "
        << row.failing.cell << "\n";
}

void print_profiles(std::ostream& out, const DecisionTable& table, const std::string& target,
                    const std::vector<query::KnowledgeProfile>& profiles) {
  if (profiles.empty())
    out << "no knowledge state yields " << table.output() << " = " << target << "\n";
  for (const auto& p : profiles) out << p.to_string(*table.vocabulary()) << "\n";
}

}  // namespace edmn::cli

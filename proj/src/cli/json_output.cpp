#include "edmn/cli/json_output.hpp"

namespace edmn::cli {

Json envelope(const std::string& command) {
  Json j;
  j["version"] = kJsonVersion;
  j["command"] = command;
  return j;
}

Json to_json(const dmn::DecisionResult& result) {
  Json j;
  j["status"] = dmn::to_string(result.kind);
  if (result.is_value()) j["decision"] = result.value;
  Json rows = Json::array();
  for (auto r : result.fired_rows) rows.push_back(r + 1);
  j["firedRows"] = rows;
  j["stateSize"] = result.state_size;
  if (result.kind == dmn::DecisionResult::Kind::HitPolicyViolation)
    j["conflicting"] = result.conflicting;
  if (!result.diagnostic.empty()) j["diagnostic"] = result.diagnostic;
  return j;
}

Json to_json(const query::KnowledgeProfile& profile, const logic::Vocabulary& vocabulary) {
  Json j = Json::object();
  for (std::size_t i = 0; i < profile.variables.size(); ++i) {
    auto symbol = *vocabulary.find_symbol(profile.variables[i]);
    Json values = Json::array();
    for (auto v : profile.possible[i]) values.push_back(vocabulary.value_name(symbol, v));
    j[profile.variables[i]] = values;
  }
  return j;
}

Json to_json(const query::Explanation& explanation) {
  Json fired = Json::array();
  for (const auto& row : explanation.fired) {
    Json cells = Json::array();
    for (const auto& c : row.cells)
      cells.push_back({{"column", c.column + 1}, {"cell", c.cell}, {"holds", c.holds}});
    fired.push_back({{"row", row.row + 1}, {"cells", cells}});
  }
  Json blocked = Json::array();
  for (const auto& row : explanation.blocked)
    blocked.push_back(
        {{"row", row.row + 1}, {"column", row.failing.column + 1}, {"cell", row.failing.cell}});
  return {{"fired", fired}, {"blocked", blocked}};
}

Json to_json(const decision::OptimalResult& result, const decision::UtilityFunction& u) {
  auto name = [](const logic::Structure& d) {
    return d.vocabulary().symbols().size() == 1 ? d.vocabulary().value_name(0, d.value(0))
                                                : d.label();
  };
  Json j;
  j["status"] = result.is_value() ? "value" : "tie";
  if (result.is_value()) {
    j["decision"] = name(result.decisions.front());
  } else {
    Json ds = Json::array();
    for (const auto& d : result.decisions) ds.push_back(name(d));
    j["decisions"] = ds;
  }
  Json aggregates = Json::object();
  for (std::size_t i = 0; i < u.decisions().size(); ++i)
    aggregates[name(u.decisions()[i])] = decision::to_string(result.aggregates[i]);
  j["aggregates"] = aggregates;
  return j;
}

}  // namespace edmn::cli

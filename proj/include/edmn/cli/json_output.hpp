#pragma once

#include <json.hpp>

#include "edmn/decision/criterion.hpp"
#include "edmn/dmn/decide.hpp"
#include "edmn/query/query.hpp"

namespace edmn::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kJsonVersion = 1;

// Object with "version" and "command" set.
Json envelope(const std::string& command);

// status, decision (values only), firedRows (1-based), stateSize,
// conflicting (violations only), diagnostic (when present).
Json to_json(const dmn::DecisionResult& result);

// {"var": ["v1", ...], ...} in variable order.
Json to_json(const query::KnowledgeProfile& profile, const logic::Vocabulary& vocabulary);

Json to_json(const query::Explanation& explanation);

Json to_json(const decision::OptimalResult& result, const decision::UtilityFunction& u);

}  // namespace edmn::cli

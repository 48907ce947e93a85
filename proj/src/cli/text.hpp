#pragma once

// Plain-text rendering shared by the batch commands and the REPL.

#include <optional>
#include <ostream>
#include <string>

#include "edmn/dmn/parser.hpp"
#include "edmn/query/query.hpp"

namespace edmn::cli {

// Facts over the table's inputs: environment facts as given, upstream
// decisions fixed to their derived values. Returns the result to report
// instead when some upstream decision is not a value.
std::optional<dmn::DecisionResult> table_facts(const dmn::Model& model,
                                               const dmn::DecisionTable& table,
                                               const dmn::FactSet& facts, std::size_t cap,
                                               dmn::FactSet& out);

std::string describe(const dmn::DecisionResult& r);

// "sal = Mr" or "sal: undefined (no row fired)"
std::string decision_line(const std::string& variable, const dmn::DecisionResult& r);

void print_decisions(std::ostream& out, const std::vector<dmn::DrdDecision>& decisions);

void print_explanation(std::ostream& out, const dmn::DecisionTable& table,
                       const dmn::DecisionResult& result, const query::Explanation& explanation);

void print_profiles(std::ostream& out, const dmn::DecisionTable& table, const std::string& target,
                    const std::vector<query::KnowledgeProfile>& profiles);

}  // namespace edmn::cli

#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "edmn/dmn/decide.hpp"
#include "edmn/dmn/table.hpp"
#include "edmn/oel/theory.hpp"

namespace edmn::dmn {

// Dependency edge: `downstream` consumes the output of `upstream`.
struct DrdEdge {
  std::string upstream;
  std::string downstream;
  bool operator==(const DrdEdge&) const = default;
};

// Acyclic network of decision tables.
class Drd {
 public:
  Drd() = default;

  const std::vector<DecisionTable>& tables() const noexcept { return tables_; }
  const std::vector<DrdEdge>& edges() const noexcept { return edges_; }
  const std::vector<std::string>& environment() const noexcept { return environment_; }
  // Table indices, every table after the tables it consumes.
  const std::vector<std::size_t>& order() const noexcept { return order_; }

  const DecisionTable* find(const std::string& name) const;
  const DecisionTable* producer_of(const std::string& variable) const;

 private:
  friend Drd compose_drd(std::vector<DecisionTable>, std::vector<DrdEdge>,
                         std::vector<std::string>);
  std::vector<DecisionTable> tables_;
  std::vector<DrdEdge> edges_;
  std::vector<std::string> environment_;
  std::vector<std::size_t> order_;
};

// Edges implied by tables consuming other tables' outputs.
std::vector<DrdEdge> derive_edges(std::span<const DecisionTable> tables);

// Validates unique names and outputs, that every consumed variable is an
// environment variable or an upstream output with a matching edge, and that
// the graph is acyclic ("cyclic DRD").
Drd compose_drd(std::vector<DecisionTable> tables, std::vector<DrdEdge> edges,
                std::vector<std::string> environment);

struct DrdDecision {
  std::string table;
  std::string variable;
  DecisionResult result;
};

// Topological evaluation. An upstream Value enters the downstream facts as
// an exactly known value; any other upstream outcome leaves dependents
// Undefined with a diagnostic.
std::vector<DrdDecision> decide_drd(const Drd& drd, const FactSet& facts,
                                    std::size_t cap = kDefaultEnumerationCap);

// Bottom theory T_E (no constraints; facts are supplied separately) followed
// by one ebd theory per table in topological order. A table's K operators
// refer to its latest upstream theory, or T_E when it has none.
oel::TheorySequence translate_drd(const Drd& drd);

}  // namespace edmn::dmn

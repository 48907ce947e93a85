#include "edmn/dmn/drd.hpp"

#include <algorithm>
#include <set>

#include "edmn/dmn/translate.hpp"
#include "edmn/error.hpp"

namespace edmn::dmn {

const DecisionTable* Drd::find(const std::string& name) const {
  for (const auto& t : tables_)
    if (t.name() == name) return &t;
  return nullptr;
}

const DecisionTable* Drd::producer_of(const std::string& variable) const {
  for (const auto& t : tables_)
    if (t.output() == variable) return &t;
  return nullptr;
}

std::vector<DrdEdge> derive_edges(std::span<const DecisionTable> tables) {
  std::vector<DrdEdge> edges;
  for (const auto& consumer : tables) {
    for (const auto& in : consumer.input_variables()) {
      for (const auto& producer : tables) {
        if (producer.output() != in) continue;
        DrdEdge e{producer.name(), consumer.name()};
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
      }
    }
  }
  return edges;
}

Drd compose_drd(std::vector<DecisionTable> tables, std::vector<DrdEdge> edges,
                std::vector<std::string> environment) {
  std::set<std::string> names;
  std::set<std::string> outputs;
  for (const auto& t : tables) {
    if (t.name() == kFactsTheory) throw ModelError("table name " + kFactsTheory + " is reserved");
    if (!names.insert(t.name()).second) throw ModelError("duplicate table " + t.name());
    if (!outputs.insert(t.output()).second)
      throw ModelError("decision variable " + t.output() + " has more than one table");
    if (std::find(environment.begin(), environment.end(), t.output()) != environment.end())
      throw ModelError("decision variable " + t.output() + " is declared as environment variable");
  }
  auto index_of = [&](const std::string& name) -> std::size_t {
    for (std::size_t i = 0; i < tables.size(); ++i)
      if (tables[i].name() == name) return i;
    throw ModelError("edge references unknown table " + name);
  };
  for (const auto& e : edges) {
    const auto& up = tables[index_of(e.upstream)];
    const auto& down = tables[index_of(e.downstream)];
    auto in = down.input_variables();
    if (std::find(in.begin(), in.end(), up.output()) == in.end())
      throw ModelError("edge " + e.upstream + " -> " + e.downstream + ": " + e.downstream +
                       " does not consume " + up.output());
  }
  for (const auto& t : tables) {
    for (const auto& in : t.input_variables()) {
      if (std::find(environment.begin(), environment.end(), in) != environment.end()) continue;
      auto producer = std::find_if(tables.begin(), tables.end(),
                                   [&](const DecisionTable& p) { return p.output() == in; });
      if (producer == tables.end())
        throw ModelError("table " + t.name() + ": undeclared dependency variable " + in);
      DrdEdge needed{producer->name(), t.name()};
      if (std::find(edges.begin(), edges.end(), needed) == edges.end())
        throw ModelError("table " + t.name() + " consumes " + in + " without an edge from " +
                         producer->name());
    }
  }

  // Kahn's algorithm preferring declaration order.
  const std::size_t n = tables.size();
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::set<std::size_t>> next(n);
  for (const auto& e : edges) {
    auto u = index_of(e.upstream);
    auto d = index_of(e.downstream);
    if (next[u].insert(d).second) ++indegree[d];
  }
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (!indegree[i]) ready.insert(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    auto i = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(i);
    for (auto d : next[i])
      if (--indegree[d] == 0) ready.insert(d);
  }
  if (order.size() != n) {
    std::string members;
    for (std::size_t i = 0; i < n; ++i)
      if (indegree[i]) members += (members.empty() ? "" : ", ") + tables[i].name();
    throw ModelError("cyclic DRD: " + members);
  }

  Drd drd;
  drd.tables_ = std::move(tables);
  drd.edges_ = std::move(edges);
  drd.environment_ = std::move(environment);
  drd.order_ = std::move(order);
  return drd;
}

std::vector<DrdDecision> decide_drd(const Drd& drd, const FactSet& facts, std::size_t cap) {
  std::vector<DrdDecision> out;
  FactSet known = facts;
  const auto& vocabulary = *drd.tables().front().vocabulary();
  for (auto i : drd.order()) {
    const auto& table = drd.tables()[i];
    DecisionResult result;
    std::string blocked;
    for (const auto& in : table.input_variables()) {
      auto it = std::find_if(out.begin(), out.end(),
                             [&](const DrdDecision& d) { return d.variable == in; });
      if (it != out.end() && !it->result.is_value()) {
        blocked = in;
        break;
      }
    }
    if (!blocked.empty()) {
      result.kind = DecisionResult::Kind::Undefined;
      result.diagnostic = "upstream decision " + blocked + " is not derived";
    } else if (!known.consistent()) {
      result.kind = DecisionResult::Kind::Inconsistent;
      result.diagnostic = "contradictory facts";
    } else {
      result = decide(table, known, cap);
    }
    if (result.is_value()) known.know_value(vocabulary, table.output(), result.value);
    out.push_back({table.name(), table.output(), std::move(result)});
  }
  return out;
}

oel::TheorySequence translate_drd(const Drd& drd) {
  if (drd.tables().empty()) throw ModelError("empty DRD");
  std::vector<oel::Theory> theories;
  theories.push_back(oel::Theory{kFactsTheory, {}, {}});
  std::vector<std::string> placed;
  for (auto i : drd.order()) {
    const auto& table = drd.tables()[i];
    std::string stratum = kFactsTheory;
    for (const auto& name : placed) {
      auto it = std::find_if(drd.edges().begin(), drd.edges().end(), [&](const DrdEdge& e) {
        return e.upstream == name && e.downstream == table.name();
      });
      if (it != drd.edges().end()) stratum = name;  // latest upstream in order
    }
    theories.push_back(translate_table(table, stratum));
    placed.push_back(table.name());
  }
  return oel::TheorySequence(drd.tables().front().vocabulary(), std::move(theories));
}

}  // namespace edmn::dmn

#include "edmn/oel/stratify.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace edmn::oel {

namespace {

// Visits every formula of a theory with its location label.
void for_each_formula(const Theory& t,
                      const std::function<void(const Formula&, const std::string&)>& visit) {
  for (std::size_t i = 0; i < t.constraints.size(); ++i)
    visit(t.constraints[i], "constraint " + std::to_string(i + 1));
  for (std::size_t d = 0; d < t.definitions.size(); ++d) {
    const auto& rules = t.definitions[d].rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      std::string loc = "definition " + std::to_string(d + 1) + " rule " + std::to_string(r + 1);
      if (!rules[r].label.empty()) loc += " (" + rules[r].label + ")";
      visit(rules[r].body, loc);
    }
  }
}

// First atom of f that is not under a K operator, if any.
const Formula* unguarded_atom(const Formula& f) {
  using Kind = Formula::Kind;
  if (f.kind() == Kind::Know) return nullptr;
  if (f.kind() == Kind::Prop || f.kind() == Kind::Eq) return &f;
  for (const auto& c : f.children())
    if (const auto* a = unguarded_atom(c)) return a;
  return nullptr;
}

}  // namespace

std::string StratificationViolation::to_string() const {
  std::string what;
  switch (kind) {
    case Kind::SelfReference: what = "self-reference"; break;
    case Kind::UnknownTheory: what = "K references unknown theory"; break;
    case Kind::KnowledgeInBottom: what = "K operator in bottom theory"; break;
    case Kind::Cycle: what = "cyclic K-reference"; break;
  }
  return what + ": theory " + theory + ", " + location + ", K[" + referenced + "]";
}

std::string StratificationReport::to_string() const {
  std::string out;
  for (const auto& v : violations) out += v.to_string() + "\n";
  return out;
}

StratificationReport check_stratification(const TheorySequence& sequence) {
  using Kind = StratificationViolation::Kind;
  const auto& theories = sequence.theories();
  const std::size_t n = theories.size();
  StratificationReport report;

  struct Ref {
    std::size_t from;  // referenced theory
    std::string location;
  };
  std::vector<std::vector<Ref>> refs(n);  // per referencing theory

  for (std::size_t i = 0; i < n; ++i) {
    for_each_formula(theories[i], [&](const Formula& f, const std::string& loc) {
      for (const auto& k : f.knowledge_nodes()) {
        auto target = sequence.find(k.theory());
        if (i == 0) {
          report.violations.push_back({Kind::KnowledgeInBottom, theories[i].id, loc, k.theory()});
        } else if (!target) {
          report.violations.push_back({Kind::UnknownTheory, theories[i].id, loc, k.theory()});
        } else if (*target == i) {
          report.violations.push_back({Kind::SelfReference, theories[i].id, loc, k.theory()});
        } else {
          refs[i].push_back({*target, loc});
        }
      }
    });
  }

  // Kahn's algorithm, always taking the lowest ready index.
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::set<std::size_t>> dependents(n);
  for (std::size_t i = 0; i < n; ++i)
    for (const auto& r : refs[i])
      if (dependents[r.from].insert(i).second) ++indegree[i];
  std::set<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.insert(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t next = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(next);
    for (auto d : dependents[next])
      if (--indegree[d] == 0) ready.insert(d);
  }
  if (order.size() != n) {
    std::vector<bool> placed(n, false);
    for (auto i : order) placed[i] = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (placed[i]) continue;
      for (const auto& r : refs[i])
        if (!placed[r.from])
          report.violations.push_back({Kind::Cycle, theories[i].id, r.location,
                                       theories[r.from].id});
    }
  }
  if (report.ok()) report.order = std::move(order);
  return report;
}

std::string EbdViolation::to_string() const {
  std::string what;
  switch (kind) {
    case Kind::UnguardedAtom: what = "unguarded atom"; break;
    case Kind::DefinedInBody: what = "defined symbol in body"; break;
    case Kind::ObjectiveConstraint: what = "unguarded atom in constraint"; break;
  }
  return what + " at " + location + ": " + detail;
}

std::string EbdReport::to_string() const {
  std::string out;
  for (const auto& v : violations) out += v.to_string() + "\n";
  return out;
}

EbdReport check_ebd(const Theory& theory) {
  using Kind = EbdViolation::Kind;
  EbdReport report;
  report.decision_symbols = theory.defined_symbols();
  std::set<std::string> defined(report.decision_symbols.begin(), report.decision_symbols.end());
  std::set<std::string> parameters;

  for (std::size_t i = 0; i < theory.constraints.size(); ++i) {
    const auto& c = theory.constraints[i];
    if (const auto* a = unguarded_atom(c))
      report.violations.push_back(
          {Kind::ObjectiveConstraint, "constraint " + std::to_string(i + 1), a->to_string()});
    for (auto& s : c.symbols()) parameters.insert(std::move(s));
  }
  for (std::size_t d = 0; d < theory.definitions.size(); ++d) {
    const auto& rules = theory.definitions[d].rules();
    for (std::size_t r = 0; r < rules.size(); ++r) {
      std::string loc = "definition " + std::to_string(d + 1) + " rule " + std::to_string(r + 1);
      if (!rules[r].label.empty()) loc += " (" + rules[r].label + ")";
      if (const auto* a = unguarded_atom(rules[r].body))
        report.violations.push_back({Kind::UnguardedAtom, loc, a->to_string()});
      for (auto& s : rules[r].body.symbols()) {
        if (defined.count(s))
          report.violations.push_back({Kind::DefinedInBody, loc, s});
        parameters.insert(std::move(s));
      }
    }
  }
  for (const auto& s : defined) parameters.erase(s);
  report.environment_symbols.assign(parameters.begin(), parameters.end());
  return report;
}

}  // namespace edmn::oel

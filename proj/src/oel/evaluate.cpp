#include "edmn/oel/evaluate.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "edmn/logic/enumerate.hpp"
#include "edmn/oel/stratify.hpp"

namespace edmn::oel {

using logic::BoundFormula;
using logic::ValueIndex;
using logic::VocabularyPtr;

void KValuation::set(const std::string& theory, const Formula& psi, bool value) {
  values_[{theory, psi.to_string()}] = value;
}

void KValuation::set(const Formula& knode, bool value) {
  if (knode.kind() != Formula::Kind::Know) throw FormulaError("not a K node: " + knode.to_string());
  set(knode.theory(), knode.children()[0], value);
}

std::optional<bool> KValuation::get(const std::string& theory, const Formula& psi) const {
  auto it = values_.find({theory, psi.to_string()});
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

bool eval_epistemic(const Formula& f, const KValuation& valuation, const Structure* s) {
  using Kind = Formula::Kind;
  switch (f.kind()) {
    case Kind::True: return true;
    case Kind::False: return false;
    case Kind::Prop:
    case Kind::Eq:
      if (!s) throw FormulaError("objective atom " + f.to_string() + " evaluated without a structure");
      return logic::eval_ground(*s, f);
    case Kind::Know: {
      auto v = valuation.get(f.theory(), f.children()[0]);
      if (!v) throw FormulaError("no valuation for " + f.to_string());
      return *v;
    }
    case Kind::Not: return !eval_epistemic(f.children()[0], valuation, s);
    case Kind::And:
      return std::all_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return eval_epistemic(c, valuation, s); });
    case Kind::Or:
      return std::any_of(f.children().begin(), f.children().end(),
                         [&](const Formula& c) { return eval_epistemic(c, valuation, s); });
    case Kind::Implies:
      return !eval_epistemic(f.children()[0], valuation, s) ||
             eval_epistemic(f.children()[1], valuation, s);
  }
  return false;
}

bool k_query(const EpistemicState& lower_models, const Formula& psi) {
  BoundFormula bound(psi, lower_models.vocabulary());
  return std::all_of(lower_models.worlds().begin(), lower_models.worlds().end(),
                     [&](const Structure& w) { return bound.eval(w.values()); });
}

KValuation resolve_knowledge(
    std::span<const Formula> formulas,
    const std::function<const EpistemicState&(const std::string& theory)>& models_for) {
  KValuation valuation;
  for (const auto& f : formulas) {
    for (const auto& k : f.knowledge_nodes()) {
      const auto& psi = k.children()[0];
      if (valuation.get(k.theory(), psi)) continue;
      valuation.set(k.theory(), psi, k_query(models_for(k.theory()), psi));
    }
  }
  return valuation;
}

std::string DefinitionResult::to_string() const {
  switch (status) {
    case Status::Defined: {
      std::string out;
      for (const auto& a : assignment) {
        if (!out.empty()) out += ", ";
        out += a.symbol + " = " + a.value;
      }
      return out;
    }
    case Status::Undefined: return "undefined(" + symbol + ")";
    case Status::Overdefined: {
      std::string out = "overdefined(" + symbol + ": ";
      for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i];
      return out + ")";
    }
  }
  return {};
}

DefinitionResult eval_definition(const Definition& definition, const KValuation& valuation,
                                 const Structure* s) {
  using Status = DefinitionResult::Status;
  DefinitionResult result;
  const auto& rules = definition.rules();
  for (std::size_t i = 0; i < rules.size(); ++i)
    if (eval_epistemic(rules[i].body, valuation, s)) result.fired.push_back(i);

  for (const auto& d : definition.defined_symbols()) {
    std::vector<std::string> values;
    for (auto i : result.fired) {
      const auto& head = rules[i].head;
      if (head.symbol != d.name) continue;
      std::string v = head.value.value_or("true");
      if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(v);
    }
    if (d.proposition) {
      result.assignment.push_back({d.name, values.empty() ? "false" : "true"});
      continue;
    }
    if (values.size() == 1) {
      result.assignment.push_back({d.name, values.front()});
      continue;
    }
    if (result.status == Status::Defined) {
      result.status = values.empty() ? Status::Undefined : Status::Overdefined;
      result.symbol = d.name;
      result.values = values;
    }
  }
  if (!result.defined()) result.assignment.clear();
  return result;
}

bool TheoryOutcome::satisfied() const {
  return constraints_hold && std::all_of(definitions.begin(), definitions.end(),
                                         [](const DefinitionResult& d) { return d.defined(); });
}

namespace {

std::vector<Formula> theory_formulas(const Theory& t) {
  std::vector<Formula> out = t.constraints;
  for (const auto& d : t.definitions)
    for (const auto& r : d.rules()) out.push_back(r.body);
  return out;
}

// Appends a fixed assignment to every world, over the vocabulary `target`
// (which must contain the old symbols plus the assigned ones).
EpistemicState extend(const EpistemicState& state, const VocabularyPtr& target,
                      const std::vector<Assignment>& assignment) {
  const auto& old_vocab = state.vocabulary();
  std::vector<logic::Structure> worlds;
  worlds.reserve(state.size());
  for (const auto& w : state.worlds()) {
    std::vector<ValueIndex> values;
    values.reserve(target->symbols().size());
    for (std::size_t i = 0; i < target->symbols().size(); ++i) {
      const auto& name = target->symbol(i).name;
      if (auto j = old_vocab.find_symbol(name)) {
        values.push_back(w.value(*j));
        continue;
      }
      auto a = std::find_if(assignment.begin(), assignment.end(),
                            [&](const Assignment& x) { return x.symbol == name; });
      if (target->symbol(i).kind == logic::SymbolKind::Proposition)
        values.push_back(a->value == "true" ? 1 : 0);
      else
        values.push_back(*target->sort_of(i).index_of(a->value));
    }
    worlds.emplace_back(target, std::move(values));
  }
  return EpistemicState(target, std::move(worlds));
}

}  // namespace

OelResult models_of_oel(const TheorySequence& sequence, std::span<const Formula> bottom_facts,
                        std::size_t cap) {
  const auto& theories = sequence.theories();
  const auto& full = sequence.vocabulary();

  auto strat = check_stratification(sequence);
  if (!strat.ok()) throw TheoryError("stratification violated:\n" + strat.to_string());

  std::vector<std::string> higher_defined;
  for (std::size_t i = 1; i < theories.size(); ++i) {
    auto ebd = check_ebd(theories[i]);
    if (!ebd.ok())
      throw TheoryError("theory " + theories[i].id + " is outside the ebd fragment:\n" +
                        ebd.to_string());
    for (auto& s : theories[i].defined_symbols()) {
      if (std::find(higher_defined.begin(), higher_defined.end(), s) != higher_defined.end())
        throw TheoryError("symbol " + s + " is defined by more than one theory");
      higher_defined.push_back(std::move(s));
    }
  }

  OelResult result(full->restrict_to(higher_defined));

  // Bottom: objective constraints, extra facts and non-recursive definitions.
  const Theory& bottom = theories[0];
  std::vector<std::string> bottom_names;
  for (const auto& s : full->symbols())
    if (std::find(higher_defined.begin(), higher_defined.end(), s.name) == higher_defined.end())
      bottom_names.push_back(s.name);
  auto bottom_vocab = full->restrict_to(bottom_names);
  for (const auto& d : bottom.definitions) {
    for (const auto& p : d.parameter_symbols())
      if (d.defines(p))
        throw TheoryError("definition in theory " + bottom.id + " is recursive in " + p);
  }
  std::vector<Formula> bottom_formulas = bottom.constraints;
  bottom_formulas.insert(bottom_formulas.end(), bottom_facts.begin(), bottom_facts.end());
  auto base = logic::models_of(bottom_formulas, bottom_vocab, cap);
  if (!bottom.definitions.empty()) {
    KValuation none;
    std::vector<logic::Structure> kept;
    for (const auto& w : base.worlds()) {
      bool ok = true;
      for (const auto& d : bottom.definitions) {
        auto r = eval_definition(d, none, &w);
        if (!r.defined()) {
          ok = false;
          break;
        }
        for (const auto& a : r.assignment)
          if (w.value_name_of(a.symbol) != a.value) ok = false;
      }
      if (ok) kept.push_back(w);
    }
    base = EpistemicState(bottom_vocab, std::move(kept));
  }
  result.bottom_models = base.size();
  if (base.empty()) {
    result.inconsistent_bottom = true;
    return result;
  }

  std::unordered_map<std::string, EpistemicState> levels;
  levels.emplace(bottom.id, base);
  EpistemicState current = base;
  std::vector<std::string> current_names = bottom_names;
  std::vector<Assignment> decided;

  for (auto index : strat.order) {
    if (index == 0) continue;
    const Theory& t = theories[index];
    auto formulas = theory_formulas(t);
    KValuation valuation;
    try {
      valuation = resolve_knowledge(formulas, [&](const std::string& id) -> const EpistemicState& {
        return levels.at(id);
      });
    } catch (const FormulaError& e) {
      throw TheoryError("theory " + t.id + ": " + e.what());
    }
    TheoryOutcome outcome{t.id, true, {}};
    for (const auto& c : t.constraints)
      if (!eval_epistemic(c, valuation)) outcome.constraints_hold = false;
    for (const auto& d : t.definitions) outcome.definitions.push_back(eval_definition(d, valuation));
    bool ok = outcome.satisfied();
    result.outcomes.push_back(std::move(outcome));
    if (!ok) return result;

    std::vector<Assignment> assigned;
    for (const auto& d : result.outcomes.back().definitions)
      assigned.insert(assigned.end(), d.assignment.begin(), d.assignment.end());
    for (const auto& a : assigned) current_names.push_back(a.symbol);
    current = extend(current, full->restrict_to(current_names), assigned);
    decided.insert(decided.end(), assigned.begin(), assigned.end());
    levels.emplace(t.id, current);
  }

  const auto& dec_vocab = result.models.vocabulary_ptr();
  std::vector<ValueIndex> values;
  for (std::size_t i = 0; i < dec_vocab->symbols().size(); ++i) {
    const auto& sym = dec_vocab->symbol(i);
    auto a = std::find_if(decided.begin(), decided.end(),
                          [&](const Assignment& x) { return x.symbol == sym.name; });
    if (sym.kind == logic::SymbolKind::Proposition)
      values.push_back(a->value == "true" ? 1 : 0);
    else
      values.push_back(*dec_vocab->sort_of(i).index_of(a->value));
  }
  result.models = EpistemicState(dec_vocab, {logic::Structure(dec_vocab, std::move(values))});
  return result;
}

}  // namespace edmn::oel

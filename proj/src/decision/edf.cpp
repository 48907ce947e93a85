#include "edmn/decision/edf.hpp"

#include <limits>

#include "edmn/dmn/decide.hpp"
#include "edmn/logic/enumerate.hpp"

namespace edmn::decision {

EpistemicDecisionFunction::EpistemicDecisionFunction(VocabularyPtr environment,
                                                     VocabularyPtr decisions)
    : env_(std::move(environment)), dec_(std::move(decisions)) {}

void EpistemicDecisionFunction::set(EpistemicState state, Structure decision) {
  if (state.empty()) throw ModelError("epistemic decision function keys must be nonempty");
  if (!logic::same_vocabulary(state.vocabulary_ptr(), env_))
    throw ModelError("key " + state.to_string() + " is not over the environment vocabulary");
  if (!logic::same_vocabulary(decision.vocabulary_ptr(), dec_))
    throw ModelError("decision " + decision.to_string() + " is not over the decision vocabulary");
  mapping_.insert_or_assign(std::move(state), std::move(decision));
}

std::optional<Structure> EpistemicDecisionFunction::at(const EpistemicState& state) const {
  auto it = mapping_.find(state);
  if (it == mapping_.end()) return std::nullopt;
  return it->second;
}

std::string EpistemicDecisionFunction::to_string() const {
  std::string out;
  for (const auto& [state, decision] : mapping_)
    out += state.to_string() + " -> " + decision.to_string() + "\n";
  return out;
}

EpistemicDecisionFunction induced_edf(const dmn::DecisionTable& table, std::size_t cap) {
  auto inputs = table.input_variables();
  auto env = table.vocabulary()->restrict_to(inputs);
  std::vector<std::string> out{table.output()};
  auto dec = table.vocabulary()->restrict_to(out);
  EpistemicDecisionFunction f(env, dec);
  for (auto& world : logic::enumerate_structures(env, cap)) {
    auto result = dmn::classical_decide(table, world);
    if (!result.is_value()) continue;
    auto v = table.output_sort().index_of(result.value);
    f.set(EpistemicState(env, {world}), Structure(dec, {*v}));
  }
  return f;
}

EpistemicDecisionFunction induced_edf(const UtilityFunction& u, const Criterion& criterion,
                                      std::size_t cap) {
  const auto& worlds = u.worlds();
  const std::size_t n = worlds.size();
  if (n >= 63 || (std::size_t{1} << n) - 1 > cap)
    throw CapExceeded("epistemic states of the utility grid",
                      n >= 63 ? std::numeric_limits<std::size_t>::max() : (std::size_t{1} << n) - 1,
                      cap);
  EpistemicDecisionFunction f(u.environment(), u.decision_vocabulary());
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Structure> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(worlds[i]);
    EpistemicState state(u.environment(), std::move(subset));
    auto r = optimal_decision(u, criterion, state);
    if (r.is_value()) f.set(std::move(state), r.decisions.front());
  }
  return f;
}

}  // namespace edmn::decision

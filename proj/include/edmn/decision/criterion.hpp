#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "edmn/decision/utility.hpp"

namespace edmn::decision {

struct Criterion {
  enum class Kind { Maximin, Maximax, Leximin, Hurwicz, MinimaxRegret };
  Kind kind = Kind::Maximin;
  Rational alpha = 0;  // Hurwicz weight on the best case, in [0, 1]

  static Criterion maximin() { return {Kind::Maximin, 0}; }
  static Criterion maximax() { return {Kind::Maximax, 0}; }
  static Criterion leximin() { return {Kind::Leximin, 0}; }
  static Criterion hurwicz(Rational alpha);
  static Criterion minimax_regret() { return {Kind::MinimaxRegret, 0}; }

  // "maximin", "hurwicz:1/2", "minimax-regret", ...
  std::string to_string() const;
  bool operator==(const Criterion&) const = default;
};

// maximin | maximax | leximin | hurwicz:ALPHA | minimax-regret
Criterion parse_criterion(std::string_view text);

struct OptimalResult {
  enum class Kind { Value, Tie };
  Kind kind = Kind::Value;
  std::vector<Structure> decisions;  // the optimal set, canonical order; one entry for Value
  // Fagg per decision of the utility's decision set. Leximin reports the
  // minimum (its first sorted component); minimax-regret the maximal regret.
  std::vector<Rational> aggregates;

  bool is_value() const noexcept { return kind == Kind::Value; }
  std::string to_string() const;
};

// Fopt over decisions of Fagg over the worlds of E. Co-optimal decisions are
// reported as a Tie, never broken. Throws UtilityError on an empty E or a
// world outside the grid.
OptimalResult optimal_decision(const UtilityFunction& u, const Criterion& criterion,
                               const EpistemicState& state);

}  // namespace edmn::decision

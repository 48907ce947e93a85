#include "edmn/decision/criterion.hpp"

#include <algorithm>

namespace edmn::decision {

Criterion Criterion::hurwicz(Rational alpha) {
  if (alpha < 0 || alpha > 1)
    throw UtilityError("hurwicz alpha must lie in [0, 1], got " + decision::to_string(alpha));
  return {Kind::Hurwicz, std::move(alpha)};
}

std::string Criterion::to_string() const {
  switch (kind) {
    case Kind::Maximin: return "maximin";
    case Kind::Maximax: return "maximax";
    case Kind::Leximin: return "leximin";
    case Kind::Hurwicz: return "hurwicz:" + decision::to_string(alpha);
    case Kind::MinimaxRegret: return "minimax-regret";
  }
  return "?";
}

Criterion parse_criterion(std::string_view text) {
  if (text == "maximin") return Criterion::maximin();
  if (text == "maximax") return Criterion::maximax();
  if (text == "leximin") return Criterion::leximin();
  if (text == "minimax-regret" || text == "minimax_regret") return Criterion::minimax_regret();
  if (text.substr(0, 8) == "hurwicz:") return Criterion::hurwicz(parse_rational(text.substr(8)));
  throw UtilityError("unknown criterion '" + std::string(text) +
                     "' (expected maximin, maximax, leximin, hurwicz:ALPHA or minimax-regret)");
}

std::string OptimalResult::to_string() const {
  auto name = [](const Structure& d) {
    return d.vocabulary().symbols().size() == 1 ? d.vocabulary().value_name(0, d.value(0))
                                                : d.label();
  };
  if (is_value()) return name(decisions.front());
  std::string out = "tie: ";
  for (std::size_t i = 0; i < decisions.size(); ++i) out += (i ? ", " : "") + name(decisions[i]);
  return out;
}

OptimalResult optimal_decision(const UtilityFunction& u, const Criterion& criterion,
                               const EpistemicState& state) {
  if (state.empty()) throw UtilityError("optimal decision needs a nonempty epistemic state");
  if (!logic::same_vocabulary(state.vocabulary_ptr(), u.environment()))
    throw UtilityError("epistemic state is not over the utility's environment vocabulary");
  std::vector<std::size_t> worlds;
  for (const auto& w : state.worlds()) {
    auto i = u.world_index(w);
    if (!i) throw UtilityError("world " + w.label() + " is outside the utility grid");
    worlds.push_back(*i);
  }
  const std::size_t n = u.decisions().size();

  // Column maxima over D, for regret.
  std::vector<Rational> best(worlds.size());
  if (criterion.kind == Criterion::Kind::MinimaxRegret) {
    for (std::size_t k = 0; k < worlds.size(); ++k) {
      best[k] = u.score(worlds[k], 0);
      for (std::size_t d = 1; d < n; ++d) best[k] = std::max(best[k], u.score(worlds[k], d));
    }
  }

  std::vector<std::vector<Rational>> sorted(n);  // leximin keys
  std::vector<Rational> aggregates(n);
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<Rational> scores;
    for (std::size_t k = 0; k < worlds.size(); ++k) {
      if (criterion.kind == Criterion::Kind::MinimaxRegret)
        scores.push_back(best[k] - u.score(worlds[k], d));
      else
        scores.push_back(u.score(worlds[k], d));
    }
    auto [lo, hi] = std::minmax_element(scores.begin(), scores.end());
    switch (criterion.kind) {
      case Criterion::Kind::Maximin: aggregates[d] = *lo; break;
      case Criterion::Kind::Maximax: aggregates[d] = *hi; break;
      case Criterion::Kind::Hurwicz:
        aggregates[d] = criterion.alpha * *hi + (1 - criterion.alpha) * *lo;
        break;
      case Criterion::Kind::MinimaxRegret: aggregates[d] = *hi; break;
      case Criterion::Kind::Leximin:
        std::sort(scores.begin(), scores.end());
        aggregates[d] = scores.front();
        sorted[d] = std::move(scores);
        break;
    }
  }

  // better(a, b): a strictly preferred to b.
  auto better = [&](std::size_t a, std::size_t b) {
    switch (criterion.kind) {
      case Criterion::Kind::Leximin: return sorted[b] < sorted[a];
      case Criterion::Kind::MinimaxRegret: return aggregates[a] < aggregates[b];
      default: return aggregates[b] < aggregates[a];
    }
  };
  std::size_t champion = 0;
  for (std::size_t d = 1; d < n; ++d)
    if (better(d, champion)) champion = d;

  OptimalResult result;
  for (std::size_t d = 0; d < n; ++d)
    if (!better(champion, d)) result.decisions.push_back(u.decisions()[d]);
  result.kind = result.decisions.size() == 1 ? OptimalResult::Kind::Value : OptimalResult::Kind::Tie;
  result.aggregates = std::move(aggregates);
  return result;
}

}  // namespace edmn::decision

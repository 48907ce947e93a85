#include <doctest.h>

#include <sstream>

#include "edmn/cli/repl.hpp"
#include "edmn/cli/run.hpp"
#include "edmn/decision/compile.hpp"
#include "edmn/decision/criterion.hpp"
#include "edmn/dmn/decide.hpp"
#include "edmn/dmn/translate.hpp"
#include "edmn/oel/evaluate.hpp"
#include "edmn/oel/stratify.hpp"
#include "edmn/query/query.hpp"
#include "fixtures.hpp"
#include "generators.hpp"

using namespace edmn;
using logic::EpistemicState;
using logic::Formula;
using logic::Structure;

namespace {

std::vector<Structure> random_worlds(std::mt19937& rng, const std::vector<Structure>& all) {
  std::vector<Structure> out;
  for (const auto& w : all)
    if (gen::coin(rng)) out.push_back(w);
  return out;
}

dmn::FactSet exact_facts(const logic::Vocabulary& v, const Structure& w) {
  dmn::FactSet facts;
  for (const auto& s : w.vocabulary().symbols()) facts.know_value(v, s.name, w.value_name_of(s.name));
  return facts;
}

}  // namespace

TEST_CASE("boolean identities and quantifier expansion") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    auto rv = gen::random_vocabulary(rng, 3, 3, 0, 2);
    const auto& v = *rv.vocabulary;
    auto f = gen::random_objective(rng, v, rv.environment, 3);
    auto g = gen::random_objective(rng, v, rv.environment, 3);
    auto lhs = Formula::negation(Formula::conjunction({f, g}));
    auto rhs = Formula::disjunction({Formula::negation(f), Formula::negation(g)});
    auto imp = Formula::implication(f, g);
    auto alt = Formula::disjunction({Formula::negation(f), g});
    const auto& x = rv.environment[0];
    auto some = Formula::exists(v, gen::sort_of(v, x).name(),
                                [&](std::string_view value) { return Formula::equals(v, x, value); });
    auto none = Formula::forall(v, gen::sort_of(v, x).name(), [&](std::string_view value) {
      return Formula::negation(Formula::equals(v, x, value));
    });
    for (const auto& w : logic::enumerate_structures(rv.vocabulary)) {
      CHECK(logic::eval_ground(w, lhs) == logic::eval_ground(w, rhs));
      CHECK(logic::eval_ground(w, imp) == logic::eval_ground(w, alt));
      CHECK(logic::eval_ground(w, some));
      CHECK_FALSE(logic::eval_ground(w, none));
      logic::BoundFormula bound(f, v);
      CHECK(bound.eval(w.values()) == logic::eval_ground(w, f));
    }
  }
}

TEST_CASE("models_of is the set of satisfying structures") {
  std::mt19937 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    auto rv = gen::random_vocabulary(rng, 3, 3, 0, 2);
    std::vector<Formula> theory{gen::random_objective(rng, *rv.vocabulary, rv.environment, 3),
                                gen::random_objective(rng, *rv.vocabulary, rv.environment, 2)};
    auto models = logic::models_of(theory, rv.vocabulary);
    for (const auto& w : logic::enumerate_structures(rv.vocabulary)) {
      bool sat = logic::eval_ground(w, theory[0]) && logic::eval_ground(w, theory[1]);
      CHECK(models.contains(w) == sat);
    }
  }
}

TEST_CASE("knowledge is antitone in the model set and collapses on singletons") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 300; ++trial) {
    auto rv = gen::random_vocabulary(rng, 3, 3, 0, 2);
    auto all = logic::enumerate_structures(rv.vocabulary);
    auto psi = gen::random_objective(rng, *rv.vocabulary, rv.environment, 3);
    EpistemicState big(rv.vocabulary, random_worlds(rng, all));
    std::vector<Structure> sub;
    for (const auto& w : big.worlds())
      if (gen::coin(rng)) sub.push_back(w);
    EpistemicState small(rv.vocabulary, sub);
    REQUIRE(small.subset_of(big));
    if (oel::k_query(big, psi)) CHECK(oel::k_query(small, psi));
    for (const auto& w : all)
      CHECK(oel::k_query(EpistemicState(rv.vocabulary, {w}), psi) == logic::eval_ground(w, psi));
  }
}

TEST_CASE("random ebd theories stay in the fragment and stratify") {
  std::mt19937 rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    auto rv = gen::random_vocabulary(rng, 3, 3, 2, 3, gen::coin(rng));
    auto seq = gen::random_ebd_sequence(rng, rv, 8);
    CHECK(oel::check_ebd(seq.theories()[1]).ok());
    auto report = oel::check_stratification(seq);
    CHECK(report.ok());
    CHECK(report.order == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("decide agrees with the OEL semantics of the translated table") {
  std::mt19937 rng(15);
  for (int trial = 0; trial < 150; ++trial) {
    auto rv = gen::random_vocabulary(rng, 3, 3, 1, 3);
    auto policy = gen::coin(rng) ? dmn::HitPolicy::Any : dmn::HitPolicy::Unique;
    auto table = gen::random_table(rng, rv, 6, policy);
    oel::TheorySequence seq(rv.vocabulary, {oel::Theory{"T_E", {}, {}}, dmn::translate_table(table)});
    dmn::for_each_rectangular(*rv.vocabulary, rv.environment, 100000, [&](const dmn::FactSet& facts) {
      auto result = dmn::decide(table, facts);
      auto formulas = dmn::facts_to_formulas(facts, *rv.vocabulary);
      auto oel_result = oel::models_of_oel(seq, formulas);
      const auto& models = oel_result.models;
      CHECK(models.size() <= 1);
      if (result.is_value()) {
        REQUIRE(models.size() == 1);
        CHECK(models.worlds()[0].value_name_of(rv.decisions[0]) == result.value);
      }
      if (policy == dmn::HitPolicy::Any) CHECK(result.is_value() == (models.size() == 1));
    });
  }
}

TEST_CASE("unique is stricter than any") {
  std::mt19937 rng(16);
  for (int trial = 0; trial < 150; ++trial) {
    auto rv = gen::random_vocabulary(rng, 3, 3, 1, 3);
    auto unique = gen::random_table(rng, rv, 6, dmn::HitPolicy::Unique);
    dmn::DecisionTable any(rv.vocabulary, "Any", dmn::HitPolicy::Any, unique.inputs(), unique.output(),
                           unique.rows());
    dmn::for_each_rectangular(*rv.vocabulary, rv.environment, 100000, [&](const dmn::FactSet& facts) {
      auto u = dmn::decide(unique, facts);
      auto a = dmn::decide(any, facts);
      CHECK(u.fired_rows == a.fired_rows);
      if (u.is_value()) CHECK(a == u);
      if (a.kind == dmn::DecisionResult::Kind::Undefined) CHECK(u.kind == a.kind);
    });
  }
}

TEST_CASE("exact knowledge reduces to classical row matching on rows free of !K") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    auto rv = gen::random_vocabulary(rng, 3, 3, 1, 3);
    auto policy = gen::coin(rng) ? dmn::HitPolicy::Any : dmn::HitPolicy::Unique;
    auto random = gen::random_table(rng, rv, 6, policy);
    std::vector<dmn::Row> rows;
    for (const auto& row : random.rows())
      if (std::none_of(row.cells.begin(), row.cells.end(),
                       [](const dmn::Cell& c) { return c.negative_knowledge(); }))
        rows.push_back(row);
    dmn::DecisionTable table(rv.vocabulary, "Classical", policy, random.inputs(), random.output(), rows);
    for (const auto& w : logic::enumerate_structures(rv.environment_vocabulary())) {
      auto epistemic = dmn::decide(table, exact_facts(*rv.vocabulary, w));
      auto classical = dmn::classical_decide(table, w);
      CHECK(epistemic.kind == classical.kind);
      CHECK(epistemic.value == classical.value);
      CHECK(epistemic.fired_rows == classical.fired_rows);
    }
  }
}

TEST_CASE("criterion identities") {
  using namespace decision;
  std::mt19937 rng(18);
  for (int trial = 0; trial < 150; ++trial) {
    auto rv = gen::random_vocabulary(rng, 2, 3, 1, 4, false, 2);
    UtilityFunction u(rv.environment_vocabulary(), rv.decision_vocabulary(),
                      [&](const Structure&, const Structure&) { return Rational(gen::uniform(rng, -4, 4)); });
    auto worlds = random_worlds(rng, u.worlds());
    if (worlds.empty()) worlds.push_back(u.worlds()[0]);
    EpistemicState small(u.environment(), worlds);
    EpistemicState all(u.environment(), u.worlds());
    auto mm = optimal_decision(u, Criterion::maximin(), small);
    auto lex = optimal_decision(u, Criterion::leximin(), small);
    for (const auto& d : lex.decisions)
      CHECK(std::find(mm.decisions.begin(), mm.decisions.end(), d) != mm.decisions.end());
    auto mm_all = optimal_decision(u, Criterion::maximin(), all);
    auto mx = optimal_decision(u, Criterion::maximax(), small);
    auto mx_all = optimal_decision(u, Criterion::maximax(), all);
    for (std::size_t d = 0; d < u.decisions().size(); ++d) {
      CHECK(mm_all.aggregates[d] <= mm.aggregates[d]);
      CHECK(mx_all.aggregates[d] >= mx.aggregates[d]);
      CHECK(mm.aggregates[d] <= mx.aggregates[d]);
    }
    auto regret = optimal_decision(u, Criterion::minimax_regret(), small);
    for (const auto& r : regret.aggregates) CHECK(r >= 0);
  }
}

TEST_CASE("minimal knowledge is a sound and complete antichain") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 100; ++trial) {
    auto rv = gen::random_vocabulary(rng, 3, 3, 1, 3);
    auto table = gen::random_table(rng, rv, 6, dmn::HitPolicy::Any);
    auto map = query::enumerate_decision_map(table);
    const auto& sort = table.output_sort();
    for (const auto& target : sort.values()) {
      auto minimal = query::minimal_knowledge(table, target);
      for (std::size_t i = 0; i < minimal.size(); ++i)
        for (std::size_t j = 0; j < minimal.size(); ++j)
          if (i != j) CHECK_FALSE(minimal[i].covers(minimal[j]));
      for (const auto& e : map) {
        bool yields = e.result.is_value() && e.result.value == target;
        bool listed = std::find(minimal.begin(), minimal.end(), e.profile) != minimal.end();
        if (listed) CHECK(yields);
        if (yields)
          CHECK(std::any_of(minimal.begin(), minimal.end(),
                            [&](const query::KnowledgeProfile& m) { return m.covers(e.profile); }));
      }
    }
  }
}

TEST_CASE("compiled decision functions round trip") {
  using namespace decision;
  std::mt19937 rng(20);
  for (int trial = 0; trial < 60; ++trial) {
    auto rv = gen::random_vocabulary(rng, 3, 3, 1, 3);
    auto f = gen::random_rectangular_edf(rng, rv, 0.3);
    auto table = compile_edf_to_edmn(f);
    EpistemicDecisionFunction back(f.environment(), f.decision_vocabulary());
    for (const auto& e : query::enumerate_decision_map(table)) {
      CHECK(e.result.kind != dmn::DecisionResult::Kind::HitPolicyViolation);
      if (!e.result.is_value()) continue;
      auto state = dmn::facts_to_state(e.profile.to_facts(*table.vocabulary()), f.environment());
      auto v = f.decision_vocabulary()->sort_of(0).index_of(e.result.value);
      back.set(state, Structure(f.decision_vocabulary(), {*v}));
    }
    CHECK(back == f);

    // Classical tables: the induced function compiles back to itself.
    auto classical = gen::random_table(rng, rv, 5, dmn::HitPolicy::Any);
    auto induced = induced_edf(classical);
    if (induced.empty()) continue;
    auto again = compile_edf_to_edmn(induced);
    for (const auto& [state, d] : induced.mapping()) {
      dmn::FactSet facts = exact_facts(*again.vocabulary(), state.worlds()[0]);
      auto r = dmn::decide(again, facts);
      REQUIRE(r.is_value());
      CHECK(r.value == d.value_name_of(rv.decisions[0]));
    }
  }
}

TEST_CASE("repl and batch decide agree") {
  auto model = fixtures::load("interview.edmn");
  std::mt19937 rng(21);
  auto path = fixtures::models_dir() + "/interview.edmn";
  for (int trial = 0; trial < 40; ++trial) {
    std::string facts;
    for (const auto& var : model.environment) {
      if (gen::coin(rng, 0.3)) continue;
      const auto& sort = gen::sort_of(*model.vocabulary, var);
      auto subset = gen::random_subset(rng, sort.size(), true);
      facts += var + " in {";
      for (std::size_t i = 0; i < subset.size(); ++i)
        facts += (i ? ", " : "") + sort.value(subset[i]);
      facts += "}; ";
    }
    std::ostringstream batch, err, session_out;
    std::istringstream in;
    std::vector<std::string> args{"edmn", "decide", path, "--facts", facts.empty() ? "# none" : facts};
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    cli::run_command_line(static_cast<int>(argv.size()), argv.data(), batch, err, in);

    cli::Session session(model, "Interview", kDefaultEnumerationCap);
    if (!facts.empty()) session.execute("know " + facts, session_out);
    std::ostringstream decided;
    session.execute("decide", decided);
    CHECK(decided.str() == batch.str());
  }
}

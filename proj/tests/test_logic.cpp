#include <doctest.h>

#include "edmn/error.hpp"
#include "edmn/logic/enumerate.hpp"
#include "edmn/logic/formula.hpp"
#include "fixtures.hpp"

using namespace edmn;
using namespace edmn::logic;
using fixtures::greeting_env;
using fixtures::world;

TEST_CASE("sort construction and lookup") {
  Sort s("Gender", {"Male", "Female"});
  CHECK(s.size() == 2);
  CHECK(s.index_of("Female") == 1u);
  CHECK_FALSE(s.index_of("female"));  // case-sensitive
  CHECK_THROWS_AS(Sort("Empty", {}), VocabularyError);
  CHECK_THROWS_AS(Sort("Dup", {"a", "a"}), VocabularyError);

  auto age = Sort::interval("Age", -2, 3);
  CHECK(age.is_integer());
  CHECK(age.size() == 6);
  CHECK(age.index_of("-2") == 0u);
  CHECK(age.index_of("3") == 5u);
  CHECK_FALSE(age.index_of("4"));
  CHECK(age.integer_value(2) == 0);
  CHECK_THROWS_AS(Sort::interval("Bad", 3, 2), VocabularyError);
}

TEST_CASE("vocabulary building") {
  auto v = greeting_env();
  CHECK(v->symbols().size() == 2);
  CHECK(v->find_symbol("mar") == 1u);
  CHECK(v->structure_count() == 4);
  CHECK(v->value_name(0, 1) == "Female");

  SUBCASE("one-value constant") {
    std::vector<SortDecl> sorts{{"S", {"a"}, std::nullopt}};
    std::vector<SymbolDecl> symbols{{"c", SymbolKind::Constant, "S"}};
    auto one = Vocabulary::build(sorts, symbols);
    CHECK(enumerate_structures(one).size() == 1);
  }
  SUBCASE("errors") {
    std::vector<SortDecl> empty{{"S", {}, std::nullopt}};
    std::vector<SymbolDecl> none;
    CHECK_THROWS_WITH_AS(Vocabulary::build(empty, none), doctest::Contains("empty domain"),
                         VocabularyError);
    std::vector<SortDecl> sorts{{"S", {"a"}, std::nullopt}};
    std::vector<SymbolDecl> dup{{"c", SymbolKind::Constant, "S"}, {"c", SymbolKind::Constant, "S"}};
    CHECK_THROWS_AS(Vocabulary::build(sorts, dup), VocabularyError);
    std::vector<SymbolDecl> undeclared{{"c", SymbolKind::Constant, "T"}};
    CHECK_THROWS_AS(Vocabulary::build(sorts, undeclared), VocabularyError);
    std::vector<SortDecl> dup_sorts{{"S", {"a"}, std::nullopt}, {"S", {"b"}, std::nullopt}};
    CHECK_THROWS_AS(Vocabulary::build(dup_sorts, none), VocabularyError);
  }
  SUBCASE("propositions") {
    std::vector<SortDecl> sorts;
    std::vector<SymbolDecl> symbols{{"p", SymbolKind::Proposition, ""},
                                    {"q", SymbolKind::Proposition, ""}};
    auto pv = Vocabulary::build(sorts, symbols);
    CHECK(pv->domain_size(0) == 2);
    CHECK(pv->value_name(0, 1) == "true");
    CHECK(enumerate_structures(pv).size() == 4);
  }
  SUBCASE("restriction keeps declaration order") {
    std::vector<std::string> names{"mar", "gen"};
    auto r = v->restrict_to(names);
    CHECK(r->symbol(0).name == "gen");
    CHECK(r->symbol(1).name == "mar");
    std::vector<std::string> only{"mar"};
    CHECK(v->restrict_to(only)->symbols().size() == 1);
  }
}

TEST_CASE("structures and epistemic states") {
  auto v = greeting_env();
  auto ms = world(v, {"Male", "Single"});
  CHECK(ms.to_string() == "{gen = Male, mar = Single}");
  CHECK(ms.label() == "(Male,Single)");
  CHECK(ms.value_name_of("mar") == "Single");
  CHECK_THROWS(Structure(v, {0}));
  CHECK_THROWS(Structure(v, {0, 2}));

  auto mm = world(v, {"Male", "Married"});
  auto fs = world(v, {"Female", "Single"});
  EpistemicState e(v, {mm, ms, ms});
  CHECK(e.size() == 2);
  CHECK(e.worlds().front() == ms);
  CHECK(e.projection(0) == std::vector<ValueIndex>{0});
  CHECK(e.projection(1) == std::vector<ValueIndex>{0, 1});
  CHECK(e.is_rectangular());
  CHECK_FALSE(EpistemicState(v, {ms, world(v, {"Female", "Married"})}).is_rectangular());
  CHECK(EpistemicState(v, {ms}).subset_of(e));
  CHECK_FALSE(EpistemicState(v, {fs}).subset_of(e));
  CHECK(EpistemicState(v).empty());
}

TEST_CASE("enumeration order and counts") {
  auto v = greeting_env();
  auto all = enumerate_structures(v);
  REQUIRE(all.size() == 4);
  CHECK(all[0].label() == "(Male,Single)");
  CHECK(all[1].label() == "(Male,Married)");
  CHECK(all[2].label() == "(Female,Single)");
  CHECK(all[3].label() == "(Female,Married)");
  CHECK_THROWS_AS(enumerate_structures(v, 3), CapExceeded);

  std::vector<SortDecl> sorts{{"GPA", {"High", "Fair", "Low"}, std::nullopt},
                              {"Minority", {"Yes", "No"}, std::nullopt}};
  std::vector<SymbolDecl> symbols{{"gpa", SymbolKind::Constant, "GPA"},
                                  {"min", SymbolKind::Constant, "Minority"}};
  CHECK(enumerate_structures(Vocabulary::build(sorts, symbols)).size() == 6);
}

TEST_CASE("ground evaluation") {
  auto v = greeting_env();
  auto s = world(v, {"Male", "Single"});
  auto male = Formula::equals(*v, "gen", "Male");
  auto female = Formula::equals(*v, "gen", "Female");
  auto single = Formula::equals(*v, "mar", "Single");
  CHECK(eval_ground(s, Formula::conjunction({male, single})));
  CHECK(eval_ground(s, Formula::disjunction({female, single})));
  CHECK_FALSE(eval_ground(s, Formula::implication(male, Formula::negation(single))));
  auto tautology = Formula::exists(*v, "Gender", [&](std::string_view g) {
    return Formula::equals(*v, "gen", g);
  });
  for (const auto& w : enumerate_structures(v)) CHECK(eval_ground(w, tautology));

  CHECK_THROWS_AS(Formula::equals(*v, "gen", "Robot"), FormulaError);
  CHECK_THROWS_AS(Formula::equals(*v, "age", "1"), FormulaError);
  CHECK_THROWS(eval_ground(s, Formula::know("T", male)));
}

TEST_CASE("formula builders and rendering") {
  auto v = greeting_env();
  auto male = Formula::equals(*v, "gen", "Male");
  auto single = Formula::equals(*v, "mar", "Single");
  CHECK(Formula::conjunction({}).kind() == Formula::Kind::True);
  CHECK(Formula::disjunction({}).kind() == Formula::Kind::False);
  CHECK(Formula::conjunction({male}) == male);
  std::vector<ValueIndex> none;
  CHECK(Formula::member(*v, "gen", none).kind() == Formula::Kind::False);

  auto k = Formula::know("T_E", Formula::disjunction({male, single}));
  CHECK(k.to_string() == "K[T_E][gen = Male | mar = Single]");
  CHECK(Formula::negation(male).to_string() == "!(gen = Male)");
  CHECK(Formula::conjunction({Formula::disjunction({male, single}), male}).to_string() ==
        "(gen = Male | mar = Single) & gen = Male");
  CHECK(k.contains_knowledge());
  CHECK(k.fully_epistemic());
  CHECK_FALSE(Formula::conjunction({k, male}).fully_epistemic());
  CHECK(Formula::conjunction({k, male}).symbols() == std::vector<std::string>{"gen", "mar"});
  CHECK(Formula::conjunction({k, Formula::negation(k)}).knowledge_nodes().size() == 2);
  CHECK_THROWS_AS(Formula::know("T", k), FormulaError);
}

TEST_CASE("models_of") {
  auto v = greeting_env();
  auto male = Formula::equals(*v, "gen", "Male");
  auto female = Formula::equals(*v, "gen", "Female");
  std::vector<Formula> f{male};
  auto e = models_of(f, v);
  REQUIRE(e.size() == 2);
  CHECK(e.worlds()[0].label() == "(Male,Single)");
  CHECK(e.worlds()[1].label() == "(Male,Married)");
  std::vector<Formula> empty;
  CHECK(models_of(empty, v).size() == 4);
  std::vector<Formula> contradiction{male, female};
  CHECK(models_of(contradiction, v).empty());
}

#include <doctest.h>

#include "edmn/dmn/parser.hpp"
#include "edmn/error.hpp"
#include "fixtures.hpp"

using namespace edmn;
using namespace edmn::dmn;

namespace {

// Returns the ParseError raised by parsing `text`.
ParseError error_of(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no parse error for:\n" << text);
  return ParseError(0, 0, "");
}

const char* kHeader =
    "sort Gender = {Male, Female}\n"
    "sort Marital = {Single, Married}\n"
    "sort Salutation = {Mr, Ms, Mrs}\n"
    "var gen : Gender\n"
    "var mar : Marital\n";

}  // namespace

TEST_CASE("greeting model") {
  auto m = fixtures::load("greeting.edmn");
  CHECK(m.environment == std::vector<std::string>{"gen", "mar"});
  REQUIRE(m.drd.tables().size() == 1);
  const auto& t = m.drd.tables()[0];
  CHECK(t.name() == "Salutation");
  CHECK(t.hit_policy() == HitPolicy::Any);
  CHECK(t.rows().size() == 5);
  CHECK(t.rows()[3].cells[1].kind() == Cell::Kind::NotKnown);
  CHECK(t.rows()[4].cells[0].kind() == Cell::Kind::NotKnown);
  CHECK(t.rows()[0].cells[1].kind() == Cell::Kind::Any);
  CHECK(t.rows()[0].line == 12);
  CHECK_FALSE(m.facts);
}

TEST_CASE("cell grammar") {
  logic::Sort marital("Marital", {"Single", "Married"});
  auto either = parse_cell("Single | Married", marital);
  REQUIRE(either.kind() == Cell::Kind::Or);
  REQUIRE(either.children().size() == 2);
  CHECK(either.children()[0] == Cell::test(CompareOp::Eq, "Single"));
  CHECK(either.children()[1] == Cell::test(CompareOp::Eq, "Married"));
  CHECK(parse_cell("Single \xE2\x88\xA8 Married", marital) == either);
  CHECK(parse_cell("-", marital) == Cell::any());
  CHECK(parse_cell("!K", marital) == Cell::not_known());
  CHECK(parse_cell("\xC2\xACK", marital) == Cell::not_known());
  CHECK(parse_cell("!K[Single]", marital) == Cell::not_known_that(Cell::test(CompareOp::Eq, "Single")));
  CHECK(parse_cell("!= Single", marital) == Cell::test(CompareOp::Ne, "Single"));
  CHECK(parse_cell("\xE2\x89\xA0 Single", marital) == Cell::test(CompareOp::Ne, "Single"));
  CHECK(parse_cell("{Single, Married}", marital) == Cell::enumeration({"Single", "Married"}));

  auto age = logic::Sort::interval("Age", -5, 100);
  CHECK(parse_cell("-3", age) == Cell::test(CompareOp::Eq, "-3"));
  CHECK(parse_cell("18..65", age) == Cell::range("18", "65"));
  CHECK(parse_cell("[18..65)", age) == Cell::range("18", "65", true, false));
  CHECK(parse_cell("(0..5]", age) == Cell::range("0", "5", false, true));
  CHECK(parse_cell(">= 65", age) == Cell::test(CompareOp::Ge, "65"));
  CHECK(parse_cell("\xE2\x89\xA4 3", age) == Cell::test(CompareOp::Le, "3"));
  CHECK(parse_cell("< 3 | > 90", age).kind() == Cell::Kind::Or);

  CHECK_THROWS_AS(parse_cell("Widowed", marital), ParseError);
  CHECK_THROWS_AS(parse_cell("< Single", marital), ParseError);
  CHECK_THROWS_AS(parse_cell("!K | Single", marital), ParseError);
  CHECK_THROWS_AS(parse_cell("{Single", marital), ParseError);
  CHECK_THROWS_AS(parse_cell("", marital), ParseError);
  CHECK_THROWS_AS(parse_cell("Single Married", marital), ParseError);
}

TEST_CASE("diagnostics carry line and column") {
  auto arity = error_of(std::string(kHeader) +
                        "table S hit A\n  inputs gen, mar\n  output sal : Salutation\n  row Male, Mr\n");
  CHECK(arity.line() == 9);
  CHECK(arity.message().find("row arity") != std::string::npos);

  auto value = error_of(std::string(kHeader) +
                        "table S hit A\n  inputs gen, mar\n  output sal : Salutation\n"
                        "  row Male, Widowed, Mr\n");
  CHECK(value.line() == 9);
  CHECK(value.column() == 13);

  auto policy = error_of(std::string(kHeader) + "table S hit F\n");
  CHECK(policy.message().find("unsupported hit policy") != std::string::npos);
  CHECK(policy.column() == 13);

  CHECK(error_of("sort S = {}\n").message().find("empty domain") != std::string::npos);
  CHECK(error_of("var x : Nope\n").message().find("unknown sort") != std::string::npos);
  CHECK(error_of("sort S = {a}\nsort S = {b}\n").line() == 2);
  CHECK(error_of("frobnicate\n").message().find("unknown statement") != std::string::npos);
  CHECK(error_of("sort S = {a}\nrow a\n").message().find("outside a table") != std::string::npos);
  CHECK(error_of(std::string(kHeader) + "table S hit A\n inputs gen, age\n output sal : Salutation\n")
            .message()
            .find("unknown variable age") != std::string::npos);
  CHECK(error_of(std::string(kHeader) + "table S hit A\n inputs gen\n output sal : Salutation\n"
                 " row Male, Sir\n")
            .message()
            .find("not in sort") != std::string::npos);
  CHECK(error_of(std::string(kHeader) + "var gen : Gender\n").message().find("duplicate") !=
        std::string::npos);
}

TEST_CASE("embedded facts and comments") {
  auto m = parse_model(std::string(kHeader) +
                       "# a comment\n"
                       "table S hit U   # trailing comment\n"
                       "  inputs gen, mar\n  output sal : Salutation\n"
                       "  row Male, -, Mr\n"
                       "fact gen = Male\nfact mar in {Single}\n");
  REQUIRE(m.facts);
  CHECK(m.facts->to_string(*m.vocabulary) == "gen = Male; mar = Single");
  auto e = error_of(std::string(kHeader) + "fact gen = Robot\n");
  CHECK(e.line() == 6);
}

TEST_CASE("repeated input columns") {
  auto m = parse_model(std::string(kHeader) +
                       "table S hit A\n  inputs gen, mar, mar\n  output sal : Salutation\n"
                       "  row Male, -, !K[!= Single], Mr\n");
  const auto& t = m.drd.tables()[0];
  CHECK(t.inputs().size() == 3);
  CHECK(t.input_variables() == std::vector<std::string>{"gen", "mar"});
}

TEST_CASE("render and reparse round trip") {
  for (const char* name : {"greeting.edmn", "interview.edmn", "classical.edmn", "letter.edmn"}) {
    auto m = fixtures::load(name);
    std::string text;
    for (const auto& sort : m.vocabulary->sorts()) {
      text += "sort " + sort.name() + " = {";
      for (std::size_t i = 0; i < sort.size(); ++i) text += (i ? ", " : "") + sort.values()[i];
      text += "}\n";
    }
    for (const auto& v : m.environment)
      text += "var " + v + " : " + m.vocabulary->sort_of(*m.vocabulary->find_symbol(v)).name() + "\n";
    for (const auto& t : m.drd.tables()) text += render_table(t);
    auto again = parse_model(text);
    REQUIRE(again.drd.tables().size() == m.drd.tables().size());
    for (std::size_t i = 0; i < m.drd.tables().size(); ++i) {
      const auto& a = m.drd.tables()[i];
      const auto& b = again.drd.tables()[i];
      CHECK(a.inputs() == b.inputs());
      REQUIRE(a.rows().size() == b.rows().size());
      for (std::size_t r = 0; r < a.rows().size(); ++r) {
        CHECK(a.rows()[r].cells == b.rows()[r].cells);
        CHECK(a.rows()[r].output == b.rows()[r].output);
      }
    }
  }
}

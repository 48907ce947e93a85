#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "edmn/dmn/cell.hpp"
#include "edmn/dmn/drd.hpp"
#include "edmn/dmn/facts.hpp"
#include "edmn/logic/vocabulary.hpp"

namespace edmn::dmn {

// A parsed model file: vocabulary (sorts, environment variables, decision
// variables), the DRD of its tables and optional embedded facts.
struct Model {
  logic::VocabularyPtr vocabulary;
  std::vector<std::string> environment;  // `var` declarations, in order
  Drd drd;
  std::optional<FactSet> facts;

  logic::VocabularyPtr environment_vocabulary() const {
    return vocabulary->restrict_to(environment);
  }
};

// Parses the line-oriented model language:
//
//   sort Gender = {Male, Female}
//   sort Age = 0..120
//   var gen : Gender
//   table Salutation hit A
//     inputs gen, mar
//     output sal : Salutation
//     row Male, -, Mr
//   fact gen = Male
//
// Errors are ParseError with 1-based line and column.
Model parse_model(std::string_view text);

// Parses one input cell against the column sort. Column numbers in errors
// are relative to the start of `text`.
Cell parse_cell(std::string_view text, const logic::Sort& sort);

}  // namespace edmn::dmn

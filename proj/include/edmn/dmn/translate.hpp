#pragma once

#include <string>

#include "edmn/dmn/table.hpp"
#include "edmn/oel/theory.hpp"

namespace edmn::dmn {

inline const std::string kFactsTheory = "T_E";

// One definition for the table's output: row i becomes
//   A_i(d) <- conjunction of the row's cell formulas
// with every K referring to `facts_theory`. '-' cells add no conjunct.
oel::Theory translate_table(const DecisionTable& table,
                            const std::string& facts_theory = kFactsTheory);

}  // namespace edmn::dmn

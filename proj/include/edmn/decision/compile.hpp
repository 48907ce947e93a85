#pragma once

#include <string>

#include "edmn/decision/edf.hpp"
#include "edmn/dmn/table.hpp"
#include "edmn/oel/theory.hpp"

namespace edmn::decision {

// Theory id of the decision layer produced by compile_edf_to_oel.
inline const std::string kDecisionTheory = "T_d";

// Two-level OEL sequence [T_E, T_d]. T_E is empty; T_d holds one definition
// over the decision constants with one rule per key E and constant d:
//
//   d = f(E)(d) <- AND_c K[T_E][OR_{v in c^E} c = v]
//                  AND_{c : |c^E| >= 2} AND_{v in c^E} !K[T_E][!(c = v)]
//
// The second group pins each projection exactly, so a rule fires on a
// rectangular state iff that state is E. Throws CompileError when a key is
// not rectangular or two keys share all projections, and when a decision
// symbol is a proposition.
oel::TheorySequence compile_edf_to_oel(const EpistemicDecisionFunction& f,
                                       std::size_t cap = kDefaultEnumerationCap);

// eDMN table with hit policy Any and one row per key. Each environment
// variable gets a main column holding its projection (`-` when it is the
// whole domain, `a | b` for several values) and, for every value v some
// row's projection of size >= 2 contains, a column repeating the variable
// with `!K[!= v]` in those rows and `-` elsewhere. Requires exactly one
// decision constant; the same key checks as compile_edf_to_oel apply.
dmn::DecisionTable compile_edf_to_edmn(const EpistemicDecisionFunction& f,
                                       const std::string& table_name = "Decision",
                                       std::size_t cap = kDefaultEnumerationCap);

}  // namespace edmn::decision

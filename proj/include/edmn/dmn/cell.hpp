#pragma once

#include <string>
#include <vector>

#include "edmn/logic/formula.hpp"
#include "edmn/logic/sort.hpp"

namespace edmn::dmn {

using logic::Formula;
using logic::ValueIndex;

enum class CompareOp { Eq, Ne, Lt, Le, Gt, Ge };

std::string to_string(CompareOp op);

// One input cell of an eDMN table.
//
//   Any            `-`, no condition
//   Test           `v`, `= v`, `!= v`, `< n`, `<= n`, `> n`, `>= n`
//   Range          `lo..hi`, `[lo..hi)`, ...
//   Enumeration    `{a, b}`
//   Or             `C1 | C2`, one K over the disjunction
//   NotKnown       `!K`, no single value of the column is known
//   NotKnownThat   `!K[C]`, C is not known
class Cell {
 public:
  enum class Kind { Any, Test, Range, Enumeration, Or, NotKnown, NotKnownThat };

  static Cell any();
  static Cell test(CompareOp op, std::string value);
  static Cell range(std::string lo, std::string hi, bool lo_inclusive = true,
                    bool hi_inclusive = true);
  static Cell enumeration(std::vector<std::string> values);
  static Cell either(Cell lhs, Cell rhs);
  static Cell not_known();
  static Cell not_known_that(Cell inner);

  Kind kind() const noexcept { return kind_; }
  CompareOp op() const noexcept { return op_; }
  const std::vector<std::string>& values() const noexcept { return values_; }
  const std::vector<Cell>& children() const noexcept { return children_; }
  bool lo_inclusive() const noexcept { return lo_inclusive_; }
  bool hi_inclusive() const noexcept { return hi_inclusive_; }

  // Test, Range, Enumeration, or an Or of those: a plain condition on the value.
  bool objective() const;
  // Whether the cell contains a `!K` form.
  bool negative_knowledge() const;

  // Throws ModelError when the cell does not fit the column sort.
  void validate(const logic::Sort& sort) const;
  // Values of the sort satisfying an objective cell, ascending.
  std::vector<ValueIndex> admitted(const logic::Sort& sort) const;

  std::string to_string() const;

  bool operator==(const Cell& other) const;

 private:
  Kind kind_ = Kind::Any;
  CompareOp op_ = CompareOp::Eq;
  std::vector<std::string> values_;  // Test: 1, Range: 2, Enumeration: n
  bool lo_inclusive_ = true;
  bool hi_inclusive_ = true;
  std::vector<Cell> children_;
};

// C(e): the objective condition of the cell on variable `variable`.
Formula objective_formula(const Cell& cell, const logic::Vocabulary& vocabulary,
                          const std::string& variable);

// The epistemic body conjunct for a cell, K referring to `theory`.
//   Any -> true; objective C -> K[T][C(e)];
//   NotKnown -> AND over v of !K[T][e = v]; NotKnownThat(C) -> !K[T][C(e)].
Formula constraint_to_formula(const Cell& cell, const logic::Vocabulary& vocabulary,
                              const std::string& variable, const std::string& theory = "T_E");

// Classical (exact-world) reading: does the cell accept value `v`?
// `!K` cells never match a known value.
bool classical_match(const Cell& cell, const logic::Sort& sort, ValueIndex v);

}  // namespace edmn::dmn

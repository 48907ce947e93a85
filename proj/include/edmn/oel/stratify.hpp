#pragma once

#include <string>
#include <vector>

#include "edmn/oel/theory.hpp"

namespace edmn::oel {

struct StratificationViolation {
  enum class Kind { SelfReference, UnknownTheory, KnowledgeInBottom, Cycle };
  Kind kind;
  std::string theory;
  std::string location;  // "constraint 2", "definition 1 rule 3"
  std::string referenced;

  std::string to_string() const;
};

struct StratificationReport {
  std::vector<std::size_t> order;  // evaluation order (indices), empty on violation
  std::vector<StratificationViolation> violations;

  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

// Finds an evaluation order in which every K[T'] is evaluated after T'.
// Among valid orders the one closest to list order is returned.
StratificationReport check_stratification(const TheorySequence& sequence);

struct EbdViolation {
  enum class Kind { UnguardedAtom, DefinedInBody, ObjectiveConstraint };
  Kind kind;
  std::string location;
  std::string detail;

  std::string to_string() const;
};

struct EbdReport {
  std::vector<EbdViolation> violations;
  std::vector<std::string> decision_symbols;     // defined
  std::vector<std::string> environment_symbols;  // parameters

  bool ok() const noexcept { return violations.empty(); }
  std::string to_string() const;
};

// Checks the epistemic-body-definition fragment: every body atom under K,
// no defined symbol in any body, constraints K-guarded.
EbdReport check_ebd(const Theory& theory);

}  // namespace edmn::oel

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "edmn/logic/formula.hpp"
#include "edmn/logic/vocabulary.hpp"

namespace edmn::oel {

using logic::Formula;

// Head of a definitional rule: `c = v` for a constant, or `p` for a
// proposition (value empty).
struct RuleHead {
  std::string symbol;
  std::optional<std::string> value;

  std::string to_string() const { return value ? symbol + " = " + *value : symbol; }
  bool operator==(const RuleHead&) const = default;
};

struct Rule {
  RuleHead head;
  Formula body;
  std::string label;  // diagnostics only, e.g. "row 3"
};

struct DefinedSymbol {
  std::string name;
  bool proposition = false;
};

// A non-inductive definition: rules over defined symbols. Symbols may be
// declared defined with no rule at all; such a constant is always undefined.
class Definition {
 public:
  Definition(const logic::Vocabulary& vocabulary, std::vector<std::string> defined,
             std::vector<Rule> rules);

  const std::vector<DefinedSymbol>& defined_symbols() const noexcept { return defined_; }
  const std::vector<Rule>& rules() const noexcept { return rules_; }
  // Symbols occurring in rule bodies, sorted.
  std::vector<std::string> parameter_symbols() const;
  bool defines(const std::string& symbol) const;

 private:
  std::vector<DefinedSymbol> defined_;
  std::vector<Rule> rules_;
};

struct Theory {
  std::string id;
  std::vector<Formula> constraints;
  std::vector<Definition> definitions;

  std::vector<std::string> defined_symbols() const;
};

// Theories listed bottom (K-free) first, over one shared vocabulary.
class TheorySequence {
 public:
  TheorySequence(logic::VocabularyPtr vocabulary, std::vector<Theory> theories);

  const logic::VocabularyPtr& vocabulary() const noexcept { return vocabulary_; }
  const std::vector<Theory>& theories() const noexcept { return theories_; }
  std::optional<std::size_t> find(const std::string& id) const;

 private:
  logic::VocabularyPtr vocabulary_;
  std::vector<Theory> theories_;
};

}  // namespace edmn::oel

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edmn/logic/structure.hpp"
#include "edmn/logic/vocabulary.hpp"

namespace edmn::logic {

// Formula AST shared by the objective (K-free) and epistemic layers.
// Quantifiers over finite sorts are expanded by the builders, so the tree
// itself is propositional. Atoms refer to symbols by name and are resolved
// against a vocabulary when bound for evaluation. Nodes are immutable and
// shared, which makes Formula a cheap value type.
class Formula {
 public:
  enum class Kind { True, False, Prop, Eq, Not, And, Or, Implies, Know };

  Formula();  // true

  static Formula top();
  static Formula bottom();
  static Formula truth(bool value) { return value ? top() : bottom(); }
  // Propositional atom `p`.
  static Formula prop(const Vocabulary& vocabulary, std::string_view name);
  // Constant atom `c = v`.
  static Formula equals(const Vocabulary& vocabulary, std::string_view constant,
                        std::string_view value);
  // Disjunction of `c = v` over the given values (false when empty).
  static Formula member(const Vocabulary& vocabulary, std::string_view constant,
                        std::span<const ValueIndex> values);
  static Formula negation(Formula f);
  static Formula conjunction(std::vector<Formula> parts);
  static Formula disjunction(std::vector<Formula> parts);
  static Formula implication(Formula lhs, Formula rhs);
  // K[theory][f]; f must be K-free.
  static Formula know(std::string theory, Formula f);

  // Finite quantifier expansion over a declared sort.
  static Formula exists(const Vocabulary& vocabulary, std::string_view sort,
                        const std::function<Formula(std::string_view)>& body);
  static Formula forall(const Vocabulary& vocabulary, std::string_view sort,
                        const std::function<Formula(std::string_view)>& body);

  Kind kind() const noexcept;
  const std::string& symbol() const noexcept;   // Prop, Eq
  const std::string& value() const noexcept;    // Eq
  const std::string& theory() const noexcept;   // Know
  const std::vector<Formula>& children() const noexcept;

  bool contains_knowledge() const;
  // Every atom lies inside some K operator.
  bool fully_epistemic() const;
  // Names of symbols occurring anywhere (including under K), sorted.
  std::vector<std::string> symbols() const;
  // Every K sub-formula, in left-to-right order.
  std::vector<Formula> knowledge_nodes() const;

  std::string to_string() const;

  bool operator==(const Formula& other) const;

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

// A K-free formula resolved against one vocabulary for fast repeated
// evaluation over many structures of that vocabulary.
class BoundFormula {
 public:
  BoundFormula(const Formula& f, const Vocabulary& vocabulary);

  bool eval(std::span<const ValueIndex> values) const { return eval_at(0, values); }

 private:
  struct Op {
    Formula::Kind kind;
    std::uint32_t symbol = 0;
    ValueIndex value = 0;
    std::vector<std::uint32_t> children;
  };

  std::uint32_t compile(const Formula& f, const Vocabulary& vocabulary);
  bool eval_at(std::uint32_t op, std::span<const ValueIndex> values) const;

  std::vector<Op> ops_;
};

// Tarskian truth of a K-free formula in a structure.
bool eval_ground(const Structure& s, const Formula& f);

}  // namespace edmn::logic

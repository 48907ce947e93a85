#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edmn/logic/sort.hpp"

namespace edmn::logic {

enum class SymbolKind { Proposition, Constant };

struct SortDecl {
  std::string name;
  std::vector<std::string> values;
  // Integer interval sorts carry their bounds instead of a value list.
  std::optional<std::pair<long long, long long>> interval;
};

struct SymbolDecl {
  std::string name;
  SymbolKind kind = SymbolKind::Constant;
  std::string sort;  // ignored for propositions
};

struct Symbol {
  std::string name;
  SymbolKind kind;
  std::size_t sort;  // index into Vocabulary::sorts(); unused for propositions
};

class Vocabulary;
using VocabularyPtr = std::shared_ptr<const Vocabulary>;

// A P/C vocabulary: finite interpreted sorts plus propositional and constant
// symbols. Symbols keep their declaration order; structures and enumeration
// follow it.
class Vocabulary {
 public:
  static VocabularyPtr build(std::span<const SortDecl> sorts, std::span<const SymbolDecl> symbols);
  static VocabularyPtr build(std::vector<Sort> sorts, std::span<const SymbolDecl> symbols);

  const std::vector<Sort>& sorts() const noexcept { return sorts_; }
  const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
  const Symbol& symbol(std::size_t i) const { return symbols_.at(i); }

  std::optional<std::size_t> find_symbol(std::string_view name) const;
  std::optional<std::size_t> find_sort(std::string_view name) const;
  const Sort& sort(std::size_t i) const { return sorts_.at(i); }
  const Sort& sort_of(std::size_t symbol) const;

  // Number of values a symbol can take (2 for propositions).
  std::size_t domain_size(std::size_t symbol) const;
  // Value name for a symbol; propositions render as "false"/"true".
  std::string value_name(std::size_t symbol, ValueIndex value) const;

  // Number of total structures, saturating at SIZE_MAX.
  std::size_t structure_count() const;

  // Sub-vocabulary keeping all sorts and the named symbols, in this
  // vocabulary's declaration order.
  VocabularyPtr restrict_to(std::span<const std::string> names) const;
  // Union with another vocabulary; shared sorts and symbols must agree.
  VocabularyPtr merge(const Vocabulary& other) const;

  bool operator==(const Vocabulary& other) const;

 private:
  Vocabulary() = default;

  std::vector<Sort> sorts_;
  std::vector<Symbol> symbols_;
};

// Same vocabulary by identity or by content.
bool same_vocabulary(const VocabularyPtr& a, const VocabularyPtr& b);

}  // namespace edmn::logic

#include "edmn/oel/theory.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include "edmn/error.hpp"

namespace edmn::oel {

using logic::SymbolKind;

Definition::Definition(const logic::Vocabulary& vocabulary, std::vector<std::string> defined,
                       std::vector<Rule> rules)
    : rules_(std::move(rules)) {
  std::unordered_set<std::string> seen;
  for (auto& name : defined) {
    auto i = vocabulary.find_symbol(name);
    if (!i) throw TheoryError("defined symbol " + name + " is not in the vocabulary");
    if (!seen.insert(name).second) throw TheoryError("symbol " + name + " defined twice");
    defined_.push_back({std::move(name), vocabulary.symbol(*i).kind == SymbolKind::Proposition});
  }
  for (const auto& r : rules_) {
    auto it = std::find_if(defined_.begin(), defined_.end(),
                           [&](const DefinedSymbol& d) { return d.name == r.head.symbol; });
    if (it == defined_.end())
      throw TheoryError("rule head " + r.head.symbol + " is not a defined symbol");
    auto i = *vocabulary.find_symbol(r.head.symbol);
    if (it->proposition) {
      if (r.head.value) throw TheoryError("proposition head " + r.head.symbol + " takes no value");
    } else {
      if (!r.head.value) throw TheoryError("constant head " + r.head.symbol + " needs a value");
      if (!vocabulary.sort_of(i).index_of(*r.head.value))
        throw TheoryError("head value " + *r.head.value + " is not in the sort of " +
                          r.head.symbol);
    }
    for (const auto& s : r.body.symbols()) {
      if (!vocabulary.find_symbol(s))
        throw TheoryError("rule body mentions unknown symbol " + s);
    }
  }
}

std::vector<std::string> Definition::parameter_symbols() const {
  std::set<std::string> out;
  for (const auto& r : rules_)
    for (auto& s : r.body.symbols()) out.insert(std::move(s));
  return {out.begin(), out.end()};
}

bool Definition::defines(const std::string& symbol) const {
  return std::any_of(defined_.begin(), defined_.end(),
                     [&](const DefinedSymbol& d) { return d.name == symbol; });
}

std::vector<std::string> Theory::defined_symbols() const {
  std::vector<std::string> out;
  for (const auto& d : definitions)
    for (const auto& s : d.defined_symbols()) out.push_back(s.name);
  return out;
}

TheorySequence::TheorySequence(logic::VocabularyPtr vocabulary, std::vector<Theory> theories)
    : vocabulary_(std::move(vocabulary)), theories_(std::move(theories)) {
  if (!vocabulary_) throw TheoryError("theory sequence without vocabulary");
  if (theories_.empty()) throw TheoryError("theory sequence needs a bottom theory");
  std::unordered_set<std::string> ids;
  for (const auto& t : theories_) {
    if (t.id.empty()) throw TheoryError("theory without id");
    if (!ids.insert(t.id).second) throw TheoryError("duplicate theory id " + t.id);
    for (const auto& c : t.constraints)
      for (const auto& s : c.symbols())
        if (!vocabulary_->find_symbol(s))
          throw TheoryError("theory " + t.id + " mentions unknown symbol " + s);
  }
}

std::optional<std::size_t> TheorySequence::find(const std::string& id) const {
  for (std::size_t i = 0; i < theories_.size(); ++i)
    if (theories_[i].id == id) return i;
  return std::nullopt;
}

}  // namespace edmn::oel

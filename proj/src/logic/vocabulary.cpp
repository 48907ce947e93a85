#include "edmn/logic/vocabulary.hpp"

#include <algorithm>
#include <limits>
#include <unordered_set>

#include "edmn/error.hpp"

namespace edmn::logic {

VocabularyPtr Vocabulary::build(std::span<const SortDecl> sorts,
                                std::span<const SymbolDecl> symbols) {
  std::vector<Sort> built;
  built.reserve(sorts.size());
  for (const auto& d : sorts) {
    if (d.interval)
      built.push_back(Sort::interval(d.name, d.interval->first, d.interval->second));
    else
      built.emplace_back(d.name, d.values);
  }
  return build(std::move(built), symbols);
}

VocabularyPtr Vocabulary::build(std::vector<Sort> sorts, std::span<const SymbolDecl> symbols) {
  std::shared_ptr<Vocabulary> v(new Vocabulary());
  std::unordered_set<std::string> names;
  for (const auto& s : sorts) {
    if (!names.insert(s.name()).second) throw VocabularyError("duplicate sort " + s.name());
  }
  v->sorts_ = std::move(sorts);
  std::unordered_set<std::string> symbol_names;
  for (const auto& d : symbols) {
    if (d.name.empty()) throw VocabularyError("empty symbol name");
    if (!symbol_names.insert(d.name).second) throw VocabularyError("duplicate symbol " + d.name);
    if (names.count(d.name)) throw VocabularyError("symbol " + d.name + " clashes with a sort name");
    Symbol sym{d.name, d.kind, 0};
    if (d.kind == SymbolKind::Constant) {
      auto s = v->find_sort(d.sort);
      if (!s) throw VocabularyError("symbol " + d.name + ": undeclared sort " + d.sort);
      sym.sort = *s;
    }
    v->symbols_.push_back(std::move(sym));
  }
  return v;
}

std::optional<std::size_t> Vocabulary::find_symbol(std::string_view name) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i].name == name) return i;
  return std::nullopt;
}

std::optional<std::size_t> Vocabulary::find_sort(std::string_view name) const {
  for (std::size_t i = 0; i < sorts_.size(); ++i)
    if (sorts_[i].name() == name) return i;
  return std::nullopt;
}

const Sort& Vocabulary::sort_of(std::size_t symbol) const {
  const auto& s = symbols_.at(symbol);
  if (s.kind != SymbolKind::Constant)
    throw VocabularyError("proposition " + s.name + " has no sort");
  return sorts_.at(s.sort);
}

std::size_t Vocabulary::domain_size(std::size_t symbol) const {
  const auto& s = symbols_.at(symbol);
  return s.kind == SymbolKind::Proposition ? 2 : sorts_.at(s.sort).size();
}

std::string Vocabulary::value_name(std::size_t symbol, ValueIndex value) const {
  const auto& s = symbols_.at(symbol);
  if (s.kind == SymbolKind::Proposition) return value ? "true" : "false";
  return sorts_.at(s.sort).value(value);
}

std::size_t Vocabulary::structure_count() const {
  constexpr auto kMax = std::numeric_limits<std::size_t>::max();
  std::size_t n = 1;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    std::size_t d = domain_size(i);
    if (n > kMax / d) return kMax;
    n *= d;
  }
  return n;
}

VocabularyPtr Vocabulary::restrict_to(std::span<const std::string> names) const {
  for (const auto& n : names)
    if (!find_symbol(n)) throw VocabularyError("unknown symbol " + n);
  std::shared_ptr<Vocabulary> v(new Vocabulary());
  v->sorts_ = sorts_;
  for (const auto& s : symbols_)
    if (std::find(names.begin(), names.end(), s.name) != names.end()) v->symbols_.push_back(s);
  return v;
}

VocabularyPtr Vocabulary::merge(const Vocabulary& other) const {
  std::vector<Sort> sorts = sorts_;
  for (const auto& s : other.sorts_) {
    auto it = std::find_if(sorts.begin(), sorts.end(),
                           [&](const Sort& x) { return x.name() == s.name(); });
    if (it == sorts.end())
      sorts.push_back(s);
    else if (!(*it == s))
      throw VocabularyError("sort " + s.name() + " declared differently in merged vocabularies");
  }
  std::vector<SymbolDecl> decls;
  auto add = [&](const Vocabulary& v) {
    for (const auto& s : v.symbols_) {
      SymbolDecl d{s.name, s.kind, s.kind == SymbolKind::Constant ? v.sorts_[s.sort].name() : ""};
      auto it = std::find_if(decls.begin(), decls.end(),
                             [&](const SymbolDecl& x) { return x.name == d.name; });
      if (it == decls.end())
        decls.push_back(std::move(d));
      else if (it->kind != d.kind || it->sort != d.sort)
        throw VocabularyError("symbol " + d.name + " declared differently in merged vocabularies");
    }
  };
  add(*this);
  add(other);
  return build(std::move(sorts), decls);
}

bool Vocabulary::operator==(const Vocabulary& other) const {
  if (sorts_.size() != other.sorts_.size() || symbols_.size() != other.symbols_.size())
    return false;
  for (std::size_t i = 0; i < sorts_.size(); ++i)
    if (!(sorts_[i] == other.sorts_[i])) return false;
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& a = symbols_[i];
    const auto& b = other.symbols_[i];
    if (a.name != b.name || a.kind != b.kind || a.sort != b.sort) return false;
  }
  return true;
}

bool same_vocabulary(const VocabularyPtr& a, const VocabularyPtr& b) {
  return a == b || (a && b && *a == *b);
}

}  // namespace edmn::logic

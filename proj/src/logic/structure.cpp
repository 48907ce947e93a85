#include "edmn/logic/structure.hpp"

#include <algorithm>

#include "edmn/error.hpp"

namespace edmn::logic {

Structure::Structure(VocabularyPtr vocabulary, std::vector<ValueIndex> values)
    : vocabulary_(std::move(vocabulary)), values_(std::move(values)) {
  if (!vocabulary_) throw VocabularyError("structure without vocabulary");
  if (values_.size() != vocabulary_->symbols().size())
    throw VocabularyError("structure is not total on its vocabulary");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= vocabulary_->domain_size(i))
      throw VocabularyError("value of " + vocabulary_->symbol(i).name + " outside its sort");
  }
}

ValueIndex Structure::value_of(std::string_view symbol) const {
  auto i = vocabulary_->find_symbol(symbol);
  if (!i) throw VocabularyError("unknown symbol " + std::string(symbol));
  return values_[*i];
}

const std::string Structure::value_name_of(std::string_view symbol) const {
  auto i = vocabulary_->find_symbol(symbol);
  if (!i) throw VocabularyError("unknown symbol " + std::string(symbol));
  return vocabulary_->value_name(*i, values_[*i]);
}

std::string Structure::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ", ";
    out += vocabulary_->symbol(i).name + " = " + vocabulary_->value_name(i, values_[i]);
  }
  return out + "}";
}

std::string Structure::label() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) out += ",";
    out += vocabulary_->value_name(i, values_[i]);
  }
  return out + ")";
}

EpistemicState::EpistemicState(VocabularyPtr vocabulary, std::vector<Structure> worlds)
    : vocabulary_(std::move(vocabulary)), worlds_(std::move(worlds)) {
  for (const auto& w : worlds_) {
    if (!same_vocabulary(w.vocabulary_ptr(), vocabulary_))
      throw VocabularyError("epistemic state mixes structures of different vocabularies");
  }
  std::sort(worlds_.begin(), worlds_.end());
  worlds_.erase(std::unique(worlds_.begin(), worlds_.end()), worlds_.end());
}

bool EpistemicState::contains(const Structure& s) const {
  return std::binary_search(worlds_.begin(), worlds_.end(), s);
}

std::vector<ValueIndex> EpistemicState::projection(std::size_t symbol) const {
  std::vector<bool> seen(vocabulary_->domain_size(symbol), false);
  for (const auto& w : worlds_) seen[w.value(symbol)] = true;
  std::vector<ValueIndex> out;
  for (std::size_t v = 0; v < seen.size(); ++v)
    if (seen[v]) out.push_back(static_cast<ValueIndex>(v));
  return out;
}

bool EpistemicState::is_rectangular() const {
  if (worlds_.empty()) return true;
  std::size_t product = 1;
  for (std::size_t i = 0; i < vocabulary_->symbols().size(); ++i) {
    product *= projection(i).size();
    if (product > worlds_.size()) return false;
  }
  return product == worlds_.size();
}

bool EpistemicState::subset_of(const EpistemicState& other) const {
  return std::includes(other.worlds_.begin(), other.worlds_.end(), worlds_.begin(), worlds_.end());
}

std::string EpistemicState::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < worlds_.size(); ++i) {
    if (i) out += ", ";
    out += worlds_[i].label();
  }
  return out + "}";
}

std::strong_ordering EpistemicState::operator<=>(const EpistemicState& other) const {
  return std::lexicographical_compare_three_way(worlds_.begin(), worlds_.end(),
                                                other.worlds_.begin(), other.worlds_.end());
}

}  // namespace edmn::logic

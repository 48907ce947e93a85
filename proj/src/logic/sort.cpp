#include "edmn/logic/sort.hpp"

#include <algorithm>
#include <unordered_set>

#include "edmn/error.hpp"

namespace edmn::logic {

namespace {

constexpr long long kMaxIntervalSize = 100'000;

}  // namespace

Sort::Sort(std::string name, std::vector<std::string> values)
    : name_(std::move(name)), values_(std::move(values)) {
  if (values_.empty()) throw VocabularyError("sort " + name_ + ": empty domain");
  std::unordered_set<std::string_view> seen;
  for (const auto& v : values_) {
    if (v.empty()) throw VocabularyError("sort " + name_ + ": empty value name");
    if (!seen.insert(v).second)
      throw VocabularyError("sort " + name_ + ": duplicate value " + v);
  }
}

Sort Sort::interval(std::string name, long long lo, long long hi) {
  if (hi < lo) throw VocabularyError("sort " + name + ": empty domain");
  if (hi - lo >= kMaxIntervalSize)
    throw VocabularyError("sort " + name + ": interval too large");
  std::vector<std::string> values;
  values.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (long long v = lo; v <= hi; ++v) values.push_back(std::to_string(v));
  Sort s(std::move(name), std::move(values));
  s.integer_ = true;
  s.lo_ = lo;
  return s;
}

std::optional<ValueIndex> Sort::index_of(std::string_view value) const {
  if (integer_) {
    // Accept "+3" / "03" spellings by normalizing through the number.
    long long n = 0;
    try {
      std::size_t used = 0;
      n = std::stoll(std::string(value), &used);
      if (used != value.size()) return std::nullopt;
    } catch (const std::exception&) {
      return std::nullopt;
    }
    if (n < lo_ || n >= lo_ + static_cast<long long>(values_.size())) return std::nullopt;
    return static_cast<ValueIndex>(n - lo_);
  }
  auto it = std::find(values_.begin(), values_.end(), value);
  if (it == values_.end()) return std::nullopt;
  return static_cast<ValueIndex>(it - values_.begin());
}

long long Sort::integer_value(ValueIndex i) const {
  if (!integer_) throw VocabularyError("sort " + name_ + " is not an integer interval");
  if (i >= values_.size()) throw VocabularyError("value index out of range in sort " + name_);
  return lo_ + static_cast<long long>(i);
}

}  // namespace edmn::logic
